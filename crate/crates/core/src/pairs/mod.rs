//! Associative pairs and algebras in coordinates, their extraction from a
//! based geometry, and the standard imbedding back into a geometry.

mod describe;
mod extract;
mod imbed;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::modspace::Subspace;
use crate::oracle::{scan_tuples, CheckReport, Failure};

pub use crate::gamma::quasi_inverse_check;
pub use describe::{PairDescription, PairShape};
pub use extract::{extract_algebra, extract_pair, ExtractedAlgebra, ExtractedPair, FiniteModule};
pub use imbed::{pair_roundtrip_check, standard_imbedding_geometry, RoundTrip, StandardImbedding};

pub(crate) fn add_vec<F: Field>(f: &F, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
    x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect()
}

pub(crate) fn scale_vec<F: Field>(f: &F, r: F::Elem, x: &[F::Elem]) -> Vec<F::Elem> {
    x.iter().map(|&a| f.mul(r, a)).collect()
}

pub(crate) fn unit_vec<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    (0..n).map(|k| if k == i { f.one() } else { f.zero() }).collect()
}

/// Σ cᵢ·rowsᵢ, with `n` the length of the rows.
pub(crate) fn combine<F: Field>(f: &F, n: usize, coeffs: &[F::Elem], rows: &[Vec<F::Elem>]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); n];
    for (&c, row) in coeffs.iter().zip(rows) {
        if !f.is_zero(c) {
            for (o, &v) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(c, v));
            }
        }
    }
    out
}

/// Some solution of `a·u = b` (column action), if any.
pub(crate) fn solve<F: Field>(a: &Matrix<F>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let f = a.field();
    let minus_b = Matrix::from_fn(f, a.rows(), 1, |r, _| f.neg(b[r]));
    let k = a.hstack(&minus_b).kernel();
    let n = a.cols();
    (0..k.rows()).find(|&r| !f.is_zero(k.get(r, n))).map(|r| {
        let s = f.inv(k.get(r, n)).expect("nonzero pivot");
        (0..n).map(|c| f.mul(s, k.get(r, c))).collect()
    })
}

fn fmt_vec<F: Field>(f: &F, v: &[F::Elem]) -> String {
    let parts: Vec<String> = v.iter().map(|&x| f.format(x)).collect();
    format!("[{}]", parts.join(","))
}

/// A finite-dimensional algebra, not necessarily associative or unital;
/// structure constants in a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    /// mult[i·dim + j] = eᵢ·eⱼ
    mult: Vec<Vec<F::Elem>>,
}

impl<F: Field> Algebra<F> {
    pub fn new(field: F, dim: usize, mult: Vec<Vec<F::Elem>>) -> Result<Self> {
        if mult.len() != dim * dim || mult.iter().any(|v| v.len() != dim) {
            return Err(Error::ShapeMismatch(format!("need {} products of length {dim}", dim * dim)));
        }
        Ok(Algebra { field, dim, mult })
    }

    /// Bilinear extension of `product` evaluated on basis vectors.
    pub fn from_basis_products(field: F, dim: usize, mut product: impl FnMut(usize, usize) -> Vec<F::Elem>) -> Self {
        let mult = (0..dim * dim).map(|ij| product(ij / dim, ij % dim)).collect();
        Algebra { field, dim, mult }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constants(&self) -> &[Vec<F::Elem>] {
        &self.mult
    }

    pub fn product(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec![f.zero(); n];
        for (i, &xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                let c = f.mul(xi, yj);
                if f.is_zero(c) {
                    continue;
                }
                for (o, &m) in out.iter_mut().zip(&self.mult[i * n + j]) {
                    *o = f.add(*o, f.mul(c, m));
                }
            }
        }
        out
    }

    /// Column-action matrix of y ↦ x·y.
    pub fn left_mult(&self, x: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.product(x, &unit_vec(&self.field, self.dim, j))).collect();
        Matrix::from_fn(&self.field, self.dim, self.dim, |r, c| cols[c][r])
    }

    /// Column-action matrix of y ↦ y·x.
    pub fn right_mult(&self, x: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.product(&unit_vec(&self.field, self.dim, j), x)).collect();
        Matrix::from_fn(&self.field, self.dim, self.dim, |r, c| cols[c][r])
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        unit_vec(&self.field, self.dim, i)
    }

    /// Associativity on basis triples.
    pub fn associativity_check(&self) -> CheckReport {
        let n = self.dim;
        scan_tuples("associativity", &[n, n, n], u64::MAX, 0, |t| {
            let [i, j, k] = [t[0], t[1], t[2]].map(|i| self.basis_vector(i));
            let l = self.product(&self.product(&i, &j), &k);
            let r = self.product(&i, &self.product(&j, &k));
            Some(self.compare(t, &l, &r))
        })
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_check().passed()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| self.mult[i * n + j] == self.mult[j * n + i]))
    }

    /// The two-sided unit, found by solving the linear system u·eᵢ = eᵢ = eᵢ·u.
    pub fn unit(&self) -> Option<Vec<F::Elem>> {
        let f = &self.field;
        let n = self.dim;
        let mut a = Matrix::zeros(f, 2 * n * n, n);
        let mut b = vec![f.zero(); 2 * n * n];
        for i in 0..n {
            for c in 0..n {
                let (r1, r2) = (i * n + c, n * n + i * n + c);
                for k in 0..n {
                    a.set(r1, k, self.mult[k * n + i][c]);
                    a.set(r2, k, self.mult[i * n + k][c]);
                }
                if i == c {
                    b[r1] = f.one();
                    b[r2] = f.one();
                }
            }
        }
        solve(&a, &b)
    }

    fn compare(&self, t: &[usize], l: &[F::Elem], r: &[F::Elem]) -> std::result::Result<(), Failure> {
        if l == r {
            Ok(())
        } else {
            Err(Failure {
                tuple: t.iter().map(|i| format!("e{i}")).collect(),
                expected: fmt_vec(&self.field, l),
                actual: fmt_vec(&self.field, r),
            })
        }
    }
}

/// An associative algebra together with its two-sided unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitalAlgebra<F: Field> {
    algebra: Algebra<F>,
    unit: Vec<F::Elem>,
}

impl<F: Field> UnitalAlgebra<F> {
    pub fn new(algebra: Algebra<F>, unit: Vec<F::Elem>) -> Result<Self> {
        if unit.len() != algebra.dim {
            return Err(Error::ShapeMismatch("unit has the wrong length".into()));
        }
        if !algebra.is_associative() {
            return Err(Error::HypothesisNotMet("associativity"));
        }
        let n = algebra.dim;
        let unital = (0..n).all(|i| {
            let e = algebra.basis_vector(i);
            algebra.product(&unit, &e) == e && algebra.product(&e, &unit) == e
        });
        if !unital {
            return Err(Error::HypothesisNotMet("two-sided unit"));
        }
        Ok(UnitalAlgebra { algebra, unit })
    }

    /// Uses the unit found by [`Algebra::unit`].
    pub fn from_algebra(algebra: Algebra<F>) -> Result<Self> {
        let unit = algebra.unit().ok_or(Error::HypothesisNotMet("two-sided unit"))?;
        Self::new(algebra, unit)
    }

    /// 𝕂 itself.
    pub fn scalars(field: F) -> Self {
        let one = field.one();
        UnitalAlgebra { algebra: Algebra { field, dim: 1, mult: vec![vec![one]] }, unit: vec![one] }
    }

    /// M(n, n; 𝕂) with basis E_ij at index i·n + j.
    pub fn matrix_algebra(field: F, n: usize) -> Self {
        let d = n * n;
        let f = field.clone();
        let algebra = Algebra::from_basis_products(field, d, |a, b| {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            if j == k { unit_vec(&f, d, i * n + l) } else { vec![f.zero(); d] }
        });
        let unit = combine(&f, d, &vec![f.one(); n], &(0..n).map(|i| unit_vec(&f, d, i * n + i)).collect::<Vec<_>>());
        UnitalAlgebra { algebra, unit }
    }

    /// M(2, 2; 𝔸): block (r, c) ∈ {0,1}² and basis k of 𝔸 at index (2r + c)·d + k.
    pub fn two_by_two(&self) -> Self {
        let f = self.field().clone();
        let d = self.dim();
        let n = 4 * d;
        let algebra = Algebra::from_basis_products(f.clone(), n, |a, b| {
            let (ra, ca, ka) = (a / d / 2, (a / d) % 2, a % d);
            let (rb, cb, kb) = (b / d / 2, (b / d) % 2, b % d);
            let mut out = vec![f.zero(); n];
            if ca == rb {
                let block = (2 * ra + cb) * d;
                out[block..block + d].copy_from_slice(&self.algebra.mult[ka * d + kb]);
            }
            out
        });
        let mut unit = vec![f.zero(); n];
        unit[..d].copy_from_slice(&self.unit);
        unit[3 * d..].copy_from_slice(&self.unit);
        UnitalAlgebra { algebra, unit }
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn field(&self) -> &F {
        &self.algebra.field
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    pub fn product(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        self.algebra.product(x, y)
    }

    /// Opposite algebra, x ∘ y = y·x.
    pub fn opposite(&self) -> Self {
        let a = &self.algebra;
        let n = a.dim;
        let mult = (0..n * n).map(|ij| a.mult[(ij % n) * n + ij / n].clone()).collect();
        UnitalAlgebra { algebra: Algebra { field: a.field.clone(), dim: n, mult }, unit: self.unit.clone() }
    }

    pub fn peirce(&self, e: &[F::Elem]) -> Result<PeirceDecomposition<F>> {
        PeirceDecomposition::new(self, e)
    }
}

/// The four joint eigenspaces A_ij = {x | ex = i·x, xe = j·x} of an idempotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeirceDecomposition<F: Field> {
    idempotent: Vec<F::Elem>,
    components: [[Subspace<F>; 2]; 2],
}

impl<F: Field> PeirceDecomposition<F> {
    pub fn new(alg: &UnitalAlgebra<F>, e: &[F::Elem]) -> Result<Self> {
        if e.len() != alg.dim() {
            return Err(Error::ShapeMismatch("idempotent has the wrong length".into()));
        }
        if alg.product(e, e) != e {
            return Err(Error::HypothesisNotMet("idempotent"));
        }
        let f = alg.field();
        let n = alg.dim();
        let l = alg.algebra.left_mult(e);
        let r = alg.algebra.right_mult(e);
        let comp = |i: i64, j: i64| {
            let li = &l - &Matrix::scalar(f, n, f.from_int(i));
            let rj = &r - &Matrix::scalar(f, n, f.from_int(j));
            Subspace::span_of(&li.vstack(&rj).kernel())
        };
        Ok(PeirceDecomposition { idempotent: e.to_vec(), components: [[comp(0, 0), comp(0, 1)], [comp(1, 0), comp(1, 1)]] })
    }

    pub fn idempotent(&self) -> &[F::Elem] {
        &self.idempotent
    }

    pub fn component(&self, i: usize, j: usize) -> &Subspace<F> {
        &self.components[i][j]
    }

    pub fn is_direct_sum(&self) -> bool {
        let all: Vec<&Subspace<F>> = self.components.iter().flatten().collect();
        let n = all[0].ambient_dim();
        let total: usize = all.iter().map(|s| s.dim()).sum();
        let stacked = all.iter().skip(1).fold(all[0].basis().clone(), |acc, s| acc.vstack(s.basis()));
        total == n && stacked.rank() == n
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

/// What a pair was built from; decides which imbedding applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairOrigin<F: Field> {
    /// Given only by structure constants.
    Abstract,
    /// (𝔸, 𝔸) with ⟨xyz⟩⁺ = xyz and ⟨xyz⟩⁻ = zyx.
    Algebra(UnitalAlgebra<F>),
    /// (Hom(E, F), Hom(F, E)) with dim E = e, dim F = f.
    Operator { e: usize, f: usize },
}

/// An associative pair (A⁺, A⁻) in coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativePair<F: Field> {
    field: F,
    plus_dim: usize,
    minus_dim: usize,
    /// plus[(i·m + j)·p + k] = ⟨e⁺ᵢ e⁻ⱼ e⁺ₖ⟩⁺
    plus: Vec<Vec<F::Elem>>,
    /// minus[(i·p + j)·m + k] = ⟨e⁻ᵢ e⁺ⱼ e⁻ₖ⟩⁻
    minus: Vec<Vec<F::Elem>>,
    origin: PairOrigin<F>,
}

impl<F: Field> AssociativePair<F> {
    /// From structure constants. Para-associativity is checked.
    pub fn new(field: F, plus_dim: usize, minus_dim: usize, plus: Vec<Vec<F::Elem>>, minus: Vec<Vec<F::Elem>>) -> Result<Self> {
        let (p, m) = (plus_dim, minus_dim);
        if plus.len() != p * m * p || plus.iter().any(|v| v.len() != p) {
            return Err(Error::ShapeMismatch("plus structure constants".into()));
        }
        if minus.len() != m * p * m || minus.iter().any(|v| v.len() != m) {
            return Err(Error::ShapeMismatch("minus structure constants".into()));
        }
        let pair = AssociativePair { field, plus_dim, minus_dim, plus, minus, origin: PairOrigin::Abstract };
        if !pair.para_associativity_check().iter().all(CheckReport::passed) {
            return Err(Error::HypothesisNotMet("para-associativity"));
        }
        Ok(pair)
    }

    fn build(field: F, p: usize, m: usize, origin: PairOrigin<F>, mut tp: impl FnMut(usize, usize, usize) -> Vec<F::Elem>, mut tm: impl FnMut(usize, usize, usize) -> Vec<F::Elem>) -> Self {
        let plus = (0..p * m * p).map(|t| tp(t / (m * p), (t / p) % m, t % p)).collect();
        let minus = (0..m * p * m).map(|t| tm(t / (p * m), (t / m) % p, t % m)).collect();
        AssociativePair { field, plus_dim: p, minus_dim: m, plus, minus, origin }
    }

    /// (𝔸, 𝔸) with ⟨xyz⟩⁺ = xyz and ⟨xyz⟩⁻ = zyx.
    pub fn from_algebra(alg: &UnitalAlgebra<F>) -> Self {
        let d = alg.dim();
        let e = |i| alg.algebra.basis_vector(i);
        let xyz = |i, j, k| alg.product(&alg.product(&e(i), &e(j)), &e(k));
        AssociativePair::build(alg.field().clone(), d, d, PairOrigin::Algebra(alg.clone()), xyz, |i, j, k| xyz(k, j, i))
    }

    /// (Hom(E, F), Hom(F, E)) with XYZ and ZYX. Coordinates are matrix
    /// entries in row-major order: A⁺ holds f×e matrices, A⁻ holds e×f.
    pub fn operator_pair(field: F, e: usize, f: usize) -> Self {
        let fl = field.clone();
        let mat = |rows: usize, cols: usize, i: usize| Matrix::from_fn(&fl, rows, cols, |r, c| if r * cols + c == i { fl.one() } else { fl.zero() });
        let flat = |m: Matrix<F>| m.as_slice().to_vec();
        AssociativePair::build(
            field.clone(),
            f * e,
            e * f,
            PairOrigin::Operator { e, f },
            |i, j, k| flat(&(&mat(f, e, i) * &mat(e, f, j)) * &mat(f, e, k)),
            |i, j, k| flat(&(&mat(e, f, k) * &mat(f, e, j)) * &mat(e, f, i)),
        )
    }

    /// Both carriers zero.
    pub fn zero(field: F) -> Self {
        Self::operator_pair(field, 0, 0)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self, sign: Sign) -> usize {
        match sign {
            Sign::Plus => self.plus_dim,
            Sign::Minus => self.minus_dim,
        }
    }

    pub fn origin(&self) -> &PairOrigin<F> {
        &self.origin
    }

    pub fn structure_constants(&self, sign: Sign) -> &[Vec<F::Elem>] {
        match sign {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    /// ⟨xyz⟩^σ with x, z ∈ A^σ and y ∈ A^{-σ}.
    pub fn triple(&self, sign: Sign, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let (n, m) = (self.dim(sign), self.dim(sign.flip()));
        let consts = self.structure_constants(sign);
        let mut out = vec![f.zero(); n];
        for (i, &xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                let xy = f.mul(xi, yj);
                if f.is_zero(xy) {
                    continue;
                }
                for (k, &zk) in z.iter().enumerate() {
                    let c = f.mul(xy, zk);
                    if f.is_zero(c) {
                        continue;
                    }
                    for (o, &v) in out.iter_mut().zip(&consts[(i * m + j) * n + k]) {
                        *o = f.add(*o, f.mul(c, v));
                    }
                }
            }
        }
        out
    }

    pub fn triple_plus(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        self.triple(Sign::Plus, x, y, z)
    }

    pub fn triple_minus(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        self.triple(Sign::Minus, x, y, z)
    }

    /// ⟨xy⟨zuv⟩⟩ = ⟨⟨xyz⟩uv⟩ = ⟨x⟨uzy⟩v⟩ on basis tuples, for both signs.
    /// The identities are multilinear, so this is a complete check.
    pub fn para_associativity_check(&self) -> Vec<CheckReport> {
        let mut out = Vec::new();
        for sign in [Sign::Plus, Sign::Minus] {
            let (n, m) = (self.dim(sign), self.dim(sign.flip()));
            let e = |d: usize, i: usize| unit_vec(&self.field, d, i);
            let s = sign.symbol();
            for (label, middle) in [("outer", false), ("inner", true)] {
                let name = format!("para-associativity ({s}, {label})");
                out.push(scan_tuples(&name, &[n, m, n, m, n], u64::MAX, 0, |t| {
                    let (x, y, z, u, v) = (e(n, t[0]), e(m, t[1]), e(n, t[2]), e(m, t[3]), e(n, t[4]));
                    let lhs = self.triple(sign, &x, &y, &self.triple(sign, &z, &u, &v));
                    let rhs = if middle {
                        self.triple(sign, &x, &self.triple(sign.flip(), &u, &z, &y), &v)
                    } else {
                        self.triple(sign, &self.triple(sign, &x, &y, &z), &u, &v)
                    };
                    Some(if lhs == rhs {
                        Ok(())
                    } else {
                        Err(Failure {
                            tuple: t.iter().map(|i| format!("e{i}")).collect(),
                            expected: fmt_vec(&self.field, &lhs),
                            actual: fmt_vec(&self.field, &rhs),
                        })
                    })
                }));
            }
        }
        out
    }

    /// Q(x): A^{-σ} → A^σ, y ↦ ⟨xyx⟩^σ, as a column-action matrix.
    pub fn jordan_q(&self, sign: Sign, x: &[F::Elem]) -> Matrix<F> {
        let (n, m) = (self.dim(sign), self.dim(sign.flip()));
        let cols: Vec<_> = (0..m).map(|j| self.triple(sign, x, &unit_vec(&self.field, m, j), x)).collect();
        Matrix::from_fn(&self.field, n, m, |r, c| cols[c][r])
    }

    /// T(x, y, z) = ⟨xyz⟩ + ⟨zyx⟩.
    pub fn jordan_t(&self, sign: Sign, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        add_vec(&self.field, &self.triple(sign, x, y, z), &self.triple(sign, z, y, x))
    }

    /// The a-homotope on A^σ: x ·ₐ y = ⟨xay⟩^σ, for a ∈ A^{-σ}.
    pub fn homotope(&self, sign: Sign, a: &[F::Elem]) -> Algebra<F> {
        let n = self.dim(sign);
        let f = self.field.clone();
        Algebra::from_basis_products(f.clone(), n, |i, k| self.triple(sign, &unit_vec(&f, n, i), a, &unit_vec(&f, n, k)))
    }

    /// x⁻¹ = Q(x)⁻¹x ∈ A^{-σ} for x ∈ A^σ, when Q(x) is invertible.
    pub fn inverse(&self, sign: Sign, x: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let q = self.jordan_q(sign, x).inverse().ok()?;
        Some(q.apply(x))
    }
}
