//! Γ in an affine chart. The ambient space is split as W = o⁻ ⊕ o⁺ with
//! coordinates ordered (o⁻, o⁺). Elements transversal to o⁻ are graphs
//! {(Xv, v)} of X ∈ Hom(o⁺, o⁻); elements transversal to o⁺ are graphs
//! {(u, Au)} of A ∈ Hom(o⁻, o⁺).

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::modspace::{transversal, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineChart<F: Field> {
    field: F,
    /// dim o⁻
    q: usize,
    /// dim o⁺
    p: usize,
}

/// Result of the affine formula: the subspace always, and the Hom matrix
/// ND⁻¹ when the denominator is invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineValue<F: Field> {
    pub subspace: Subspace<F>,
    pub hom: Option<Matrix<F>>,
}

impl<F: Field> AffineChart<F> {
    pub fn new(field: &F, minus_dim: usize, plus_dim: usize) -> Self {
        AffineChart { field: field.clone(), q: minus_dim, p: plus_dim }
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    pub fn o_plus(&self) -> Subspace<F> {
        self.plus_graph(&Matrix::zeros(&self.field, self.q, self.p))
    }

    pub fn o_minus(&self) -> Subspace<F> {
        self.minus_graph(&Matrix::zeros(&self.field, self.p, self.q))
    }

    /// {(Xv, v)} for a q×p matrix X.
    pub fn plus_graph(&self, x: &Matrix<F>) -> Subspace<F> {
        assert_eq!((x.rows(), x.cols()), (self.q, self.p), "plus chart expects a q×p matrix");
        let rows = x.transpose().hstack(&Matrix::identity(&self.field, self.p));
        Subspace::span_of(&rows)
    }

    /// {(u, Au)} for a p×q matrix A.
    pub fn minus_graph(&self, a: &Matrix<F>) -> Subspace<F> {
        assert_eq!((a.rows(), a.cols()), (self.p, self.q), "minus chart expects a p×q matrix");
        let rows = Matrix::identity(&self.field, self.q).hstack(&a.transpose());
        Subspace::span_of(&rows)
    }

    /// Chart coordinate X of `x`, when x ⊤ o⁻.
    pub fn plus_coordinate(&self, x: &Subspace<F>) -> Option<Matrix<F>> {
        if x.ambient_dim() != self.dim() || !transversal(x, &self.o_minus()) {
            return None;
        }
        // x ⊤ o⁻ forces the o⁺ block of the basis to be invertible
        let lower = x.basis().submatrix(0..self.p, self.q..self.dim());
        let upper = x.basis().submatrix(0..self.p, 0..self.q);
        let normalized = &lower.inverse().ok()? * &upper;
        Some(normalized.transpose())
    }

    /// Chart coordinate A of `a`, when a ⊤ o⁺.
    pub fn minus_coordinate(&self, a: &Subspace<F>) -> Option<Matrix<F>> {
        if a.ambient_dim() != self.dim() || !transversal(a, &self.o_plus()) {
            return None;
        }
        let left = a.basis().submatrix(0..self.q, 0..self.q);
        let right = a.basis().submatrix(0..self.q, self.q..self.dim());
        let normalized = &left.inverse().ok()? * &right;
        Some(normalized.transpose())
    }

    /// Numerator/denominator form of Γ(X, A, Y, B, Z). Needs 1−AX and 1−BZ
    /// invertible.
    pub fn gamma(&self, x: &Matrix<F>, a: &Matrix<F>, y: &Matrix<F>, b: &Matrix<F>, z: &Matrix<F>) -> Result<AffineValue<F>> {
        let f = &self.field;
        for m in [x, y, z] {
            if (m.rows(), m.cols()) != (self.q, self.p) {
                return Err(Error::ShapeMismatch("plus coordinates must be q×p".into()));
            }
        }
        for m in [a, b] {
            if (m.rows(), m.cols()) != (self.p, self.q) {
                return Err(Error::ShapeMismatch("minus coordinates must be p×q".into()));
            }
        }
        let one = Matrix::identity(f, self.p);
        let ax = (&one - &(a * x)).inverse().map_err(|_| Error::NotQuasiInvertible("X, A"))?;
        let bz = (&one - &(b * z)).inverse().map_err(|_| Error::NotQuasiInvertible("Z, B"))?;
        let left = &ax * &(&one - &(a * y));
        let right = &bz * &(&one - &(b * y));
        let d = &(&left - &one) + &right;
        let num = &(&(x * &left) - y) + &(z * &right);
        let cols = num.vstack(&d);
        let subspace = Subspace::span_of(&cols.transpose());
        let hom = d.inverse().ok().map(|di| &num * &di);
        Ok(AffineValue { subspace, hom })
    }

    /// Same formula on subspaces, converting to chart coordinates first.
    pub fn gamma_subspaces(
        &self,
        x: &Subspace<F>,
        a: &Subspace<F>,
        y: &Subspace<F>,
        b: &Subspace<F>,
        z: &Subspace<F>,
    ) -> Result<AffineValue<F>> {
        let plus = |s: &Subspace<F>| self.plus_coordinate(s).ok_or(Error::OutsideDomain);
        let minus = |s: &Subspace<F>| self.minus_coordinate(s).ok_or(Error::OutsideDomain);
        self.gamma(&plus(x)?, &minus(a)?, &plus(y)?, &minus(b)?, &plus(z)?)
    }
}

/// True iff 1 − AX is invertible.
pub fn quasi_inverse_check<F: Field>(x: &Matrix<F>, a: &Matrix<F>) -> Result<bool> {
    if a.cols() != x.rows() || a.rows() != x.cols() {
        return Err(Error::ShapeMismatch("A must be p×q when X is q×p".into()));
    }
    let one = Matrix::identity(x.field(), x.cols());
    Ok((&one - &(a * x)).is_invertible())
}

/// The homogeneous formulas for Γ with x, y, z given as injections o⁺ → W
/// (n×p column matrices) and a, b as surjections W → o⁺ (p×n row matrices).
pub mod homogeneous {
    use super::*;

    /// Middle multiplication form, needs ax and bz invertible.
    pub fn middle<F: Field>(x: &Matrix<F>, a: &Matrix<F>, y: &Matrix<F>, b: &Matrix<F>, z: &Matrix<F>) -> Result<Matrix<F>> {
        let axi = (a * x).inverse()?;
        let bzi = (b * z).inverse()?;
        let t1 = &(&(x * &axi) * a) * y;
        let t3 = &(&(z * &bzi) * b) * y;
        Ok(&(&t1 - y) + &t3)
    }

    /// Left multiplication form, needs ax and by invertible.
    pub fn left<F: Field>(x: &Matrix<F>, a: &Matrix<F>, y: &Matrix<F>, b: &Matrix<F>, z: &Matrix<F>) -> Result<Matrix<F>> {
        let axi = (a * x).inverse()?;
        let byi = (b * y).inverse()?;
        let pyb_z = &(&(y * &byi) * b) * z;
        let t1 = &(&(x * &axi) * a) * &pyb_z;
        Ok(&(&t1 - &pyb_z) + z)
    }

    /// Right multiplication form, needs ay and bz invertible.
    pub fn right<F: Field>(x: &Matrix<F>, a: &Matrix<F>, y: &Matrix<F>, b: &Matrix<F>, z: &Matrix<F>) -> Result<Matrix<F>> {
        let ayi = (a * y).inverse()?;
        let bzi = (b * z).inverse()?;
        let pya_x = &(&(y * &ayi) * a) * x;
        let t3 = &(&(z * &bzi) * b) * &pya_x;
        Ok(&(x - &pya_x) + &t3)
    }
}
