use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::exactla::{Field, Matrix};

/// A subspace of 𝕂ⁿ held as its reduced row echelon basis. The annihilator
/// (a basis of the dual constraints) is cached because membership tests and
/// meets go through it.
#[derive(Clone)]
pub struct Subspace<F: Field> {
    basis: Matrix<F>,
    pivots: Vec<usize>,
    ann: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    /// Canonicalizes the row span of `m`. No invariance check.
    pub fn span_of(m: &Matrix<F>) -> Self {
        let mut basis = m.clone();
        let pivots = basis.rref_in_place();
        basis.truncate_rows(pivots.len());
        let ann = crate::exactla::matrix::kernel_from_rref(&basis, &pivots);
        Subspace { basis, pivots, ann }
    }

    pub fn zero(field: &F, n: usize) -> Self {
        Self::span_of(&Matrix::zeros(field, 0, n))
    }

    pub fn full(field: &F, n: usize) -> Self {
        Self::span_of(&Matrix::identity(field, n))
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Rows `c` with `c·v = 0` for exactly the vectors `v` of the subspace.
    pub fn annihilator(&self) -> &Matrix<F> {
        &self.ann
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = self.field();
        self.ann.apply(v).iter().all(|&e| f.is_zero(e))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    /// Image under a column-action operator `op`.
    pub fn image(&self, op: &Matrix<F>) -> Self {
        Self::span_of(&(&self.basis * &op.transpose()))
    }

    /// Image under a row action `v ↦ v·g`.
    pub fn right_image(&self, g: &Matrix<F>) -> Self {
        Self::span_of(&(&self.basis * g))
    }

    /// Literal body such as `[1,0; 0,1]`, `[]` for the zero subspace.
    pub fn to_literal(&self) -> String {
        let f = self.field();
        let rows: Vec<String> = (0..self.dim())
            .map(|r| {
                self.basis
                    .row(r)
                    .iter()
                    .map(|&e| f.format(e))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl<F: Field> Eq for Subspace<F> {}

impl<F: Field> Hash for Subspace<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.basis.hash(state);
    }
}

impl<F: Field> PartialOrd for Subspace<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Ord for Subspace<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.basis.cmp(&other.basis)
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}

impl<F: Field> fmt::Display for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}
