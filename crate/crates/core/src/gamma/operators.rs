use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::modspace::{transversal, Subspace};

/// A linear operator up to invertible scalars. Operators act on column
/// vectors; a subspace maps to the span of the images of its basis rows.
#[derive(Clone, Debug)]
pub struct ProjOperator<F: Field> {
    matrix: Matrix<F>,
}

impl<F: Field> ProjOperator<F> {
    pub fn new(matrix: Matrix<F>) -> Self {
        ProjOperator { matrix }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<F> {
        self.matrix
    }

    pub fn apply(&self, x: &Subspace<F>) -> Subspace<F> {
        x.image(&self.matrix)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        ProjOperator::new(&self.matrix * &other.matrix)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.projective_normal_form().is_identity()
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }
}

impl<F: Field> PartialEq for ProjOperator<F> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix.projectively_equal(&other.matrix)
    }
}

impl<F: Field> Eq for ProjOperator<F> {}

fn same_ambient<F: Field>(subs: &[&Subspace<F>]) -> Result<usize> {
    let n = subs[0].ambient_dim();
    if subs.iter().any(|s| s.ambient_dim() != n) {
        return Err(Error::MixedSpaces);
    }
    Ok(n)
}

fn require_transversal<F: Field>(
    x: &Subspace<F>,
    a: &Subspace<F>,
    first: &'static str,
    second: &'static str,
) -> Result<()> {
    if transversal(x, a) {
        Ok(())
    } else {
        Err(Error::NotTransversal { first, second })
    }
}

/// Projector onto `x` with kernel `a`, as a column-action matrix.
pub fn projector<F: Field>(x: &Subspace<F>, a: &Subspace<F>) -> Result<Matrix<F>> {
    same_ambient(&[x, a])?;
    require_transversal(x, a, "x", "a")?;
    Ok(projector_unchecked(x, a))
}

pub(crate) fn projector_unchecked<F: Field>(x: &Subspace<F>, a: &Subspace<F>) -> Matrix<F> {
    let f = x.field();
    let n = x.ambient_dim();
    let basis = x.basis().vstack(a.basis());
    let inv = basis.inverse().expect("transversal bases form a basis");
    // v = c·B ↦ (c restricted to the x-part)·B, i.e. v ↦ v·B⁻¹·D·B
    let mut d = Matrix::zeros(f, n, n);
    for i in 0..x.dim() {
        d.set(i, i, f.one());
    }
    (&(&inv * &d) * &basis).transpose()
}

/// L_{xayb} = 1 − P_a^x P_y^b.
pub fn l_operator<F: Field>(
    x: &Subspace<F>,
    a: &Subspace<F>,
    y: &Subspace<F>,
    b: &Subspace<F>,
) -> Result<ProjOperator<F>> {
    same_ambient(&[x, a, y, b])?;
    require_transversal(x, a, "x", "a")?;
    require_transversal(y, b, "y", "b")?;
    Ok(l_unchecked(x, a, y, b))
}

pub(crate) fn l_unchecked<F: Field>(x: &Subspace<F>, a: &Subspace<F>, y: &Subspace<F>, b: &Subspace<F>) -> ProjOperator<F> {
    let one = Matrix::identity(x.field(), x.ambient_dim());
    let p = &projector_unchecked(a, x) * &projector_unchecked(y, b);
    ProjOperator::new(&one - &p)
}

/// M_{xabz} = P_x^a − P_b^z.
pub fn m_operator<F: Field>(
    x: &Subspace<F>,
    a: &Subspace<F>,
    b: &Subspace<F>,
    z: &Subspace<F>,
) -> Result<ProjOperator<F>> {
    same_ambient(&[x, a, b, z])?;
    require_transversal(x, a, "x", "a")?;
    require_transversal(z, b, "z", "b")?;
    Ok(m_unchecked(x, a, b, z))
}

pub(crate) fn m_unchecked<F: Field>(x: &Subspace<F>, a: &Subspace<F>, b: &Subspace<F>, z: &Subspace<F>) -> ProjOperator<F> {
    ProjOperator::new(&projector_unchecked(x, a) - &projector_unchecked(b, z))
}

/// R_{aybz} = 1 − P_b^z P_y^a.
pub fn r_operator<F: Field>(
    a: &Subspace<F>,
    y: &Subspace<F>,
    b: &Subspace<F>,
    z: &Subspace<F>,
) -> Result<ProjOperator<F>> {
    same_ambient(&[a, y, b, z])?;
    require_transversal(y, a, "y", "a")?;
    require_transversal(z, b, "z", "b")?;
    Ok(r_unchecked(a, y, b, z))
}

pub(crate) fn r_unchecked<F: Field>(a: &Subspace<F>, y: &Subspace<F>, b: &Subspace<F>, z: &Subspace<F>) -> ProjOperator<F> {
    let one = Matrix::identity(a.field(), a.ambient_dim());
    let p = &projector_unchecked(b, z) * &projector_unchecked(y, a);
    ProjOperator::new(&one - &p)
}

/// δ^{(s)}_{xa} = s·1 + (1−s)·P_x^a.
pub fn delta_operator<F: Field>(s: F::Elem, x: &Subspace<F>, a: &Subspace<F>) -> Result<ProjOperator<F>> {
    let n = same_ambient(&[x, a])?;
    require_transversal(x, a, "x", "a")?;
    let f = x.field();
    let scaled = Matrix::scalar(f, n, s);
    let p = projector_unchecked(x, a).scale(f.sub(f.one(), s));
    Ok(ProjOperator::new(&scaled + &p))
}

/// The four operator families, for callers that pick one at run time.
#[derive(Clone, Debug)]
pub enum MultOperator<'a, F: Field> {
    L { x: &'a Subspace<F>, a: &'a Subspace<F>, y: &'a Subspace<F>, b: &'a Subspace<F> },
    M { x: &'a Subspace<F>, a: &'a Subspace<F>, b: &'a Subspace<F>, z: &'a Subspace<F> },
    R { a: &'a Subspace<F>, y: &'a Subspace<F>, b: &'a Subspace<F>, z: &'a Subspace<F> },
    Delta { s: F::Elem, x: &'a Subspace<F>, a: &'a Subspace<F> },
}

pub fn mult_operator<F: Field>(kind: MultOperator<'_, F>) -> Result<ProjOperator<F>> {
    match kind {
        MultOperator::L { x, a, y, b } => l_operator(x, a, y, b),
        MultOperator::M { x, a, b, z } => m_operator(x, a, b, z),
        MultOperator::R { a, y, b, z } => r_operator(a, y, b, z),
        MultOperator::Delta { s, x, a } => delta_operator(s, x, a),
    }
}
