use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over a field. Operators act on column vectors;
/// subspaces are spanned by rows.
#[derive(Clone)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Eq for Matrix<F> {}

impl<F: Field> Hash for Matrix<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl<F: Field> PartialOrd for Matrix<F> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Ord for Matrix<F> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.rows, self.cols, &self.data).cmp(&(other.rows, other.cols, &other.data))
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|&e| self.field.format(e)).collect();
            write!(f, "{}", row.join(","))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn scalar(field: &F, n: usize, s: F::Elem) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = s;
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Builds a matrix from a flat row-major buffer.
    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    /// Rows of equal length; `cols` is needed for the empty case.
    pub fn from_rows(field: &F, cols: usize, rows: &[Vec<F::Elem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Convenience constructor from integer rows, reduced into the field.
    pub fn from_ints(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, rows.len(), cols, |r, c| field.from_int(rows[r][c]))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> F::Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn as_slice(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| self.field.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c { e == self.field.one() } else { self.field.is_zero(e) }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn scale(&self, s: F::Elem) -> Self {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&e| f.mul(s, e)).collect(),
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols, data }
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        let mut m = Self::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.set(self.rows + r, self.cols + c, other.get(r, c));
            }
        }
        m
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(&self.field, rows.len(), cols.len(), |r, c| self.get(r0 + r, c0 + c))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols, "apply length mismatch");
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.rows, "apply_row length mismatch");
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (r, &vr) in v.iter().enumerate() {
            if f.is_zero(vr) {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(vr, m));
            }
        }
        out
    }

    /// Reduces in place to reduced row echelon form and returns the pivot
    /// columns. Zero rows end up at the bottom.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let Some(sel) = (pr..rows).find(|&r| !f.is_zero(self.data[r * cols + c])) else {
                continue;
            };
            if sel != pr {
                for k in 0..cols {
                    self.data.swap(sel * cols + k, pr * cols + k);
                }
            }
            let inv = f.inv(self.data[pr * cols + c]).expect("nonzero pivot");
            for k in c..cols {
                let idx = pr * cols + k;
                self.data[idx] = f.mul(self.data[idx], inv);
            }
            for r in 0..rows {
                if r == pr {
                    continue;
                }
                let factor = self.data[r * cols + c];
                if f.is_zero(factor) {
                    continue;
                }
                for k in c..cols {
                    let sub = f.mul(factor, self.data[pr * cols + k]);
                    let idx = r * cols + k;
                    self.data[idx] = f.sub(self.data[idx], sub);
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    /// Canonical reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Drops rows past `n`.
    pub fn truncate_rows(&mut self, n: usize) {
        if n < self.rows {
            self.rows = n;
            self.data.truncate(n * self.cols);
        }
    }

    /// Basis (as rows) of the null space `{v | M v = 0}`.
    pub fn kernel(&self) -> Self {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = self.hstack(&Self::identity(&self.field, n));
        let pivots = aug.rref_in_place();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return Err(Error::SingularMatrix);
        }
        Ok(aug.submatrix(0..n, n..2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Normalizes so the first nonzero entry is one; used for equality of
    /// operators up to invertible scalars.
    pub fn projective_normal_form(&self) -> Self {
        let f = &self.field;
        match self.data.iter().find(|&&e| !f.is_zero(e)) {
            Some(&lead) => self.scale(f.inv(lead).expect("nonzero")),
            None => self.clone(),
        }
    }

    pub fn projectively_equal(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.projective_normal_form() == other.projective_normal_form()
    }
}

/// Null-space basis read off an already reduced matrix.
pub(crate) fn kernel_from_rref<F: Field>(r: &Matrix<F>, pivots: &[usize]) -> Matrix<F> {
    let f = r.field();
    let cols = r.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut k = Matrix::zeros(f, free.len(), cols);
    for (i, &fc) in free.iter().enumerate() {
        k.set(i, fc, f.one());
        for (pr, &pc) in pivots.iter().enumerate() {
            k.set(i, pc, f.neg(r.get(pr, fc)));
        }
    }
    k
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;

    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..rhs.cols {
                    let idx = r * rhs.cols + c;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, rhs.get(k, c)));
                }
            }
        }
        out
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;

    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;

    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;

    fn neg(self) -> Matrix<F> {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.neg(a)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::field::{FiniteField, PrimeField, Rationals};
    use proptest::prelude::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_of_zero_matrix() {
        let f = gf(2);
        let z = Matrix::zeros(&f, 1, 1);
        let (r, piv) = z.rref();
        assert_eq!(r, z);
        assert!(piv.is_empty());
    }

    #[test]
    fn rref_of_identity() {
        let f = gf(5);
        let i = Matrix::identity(&f, 4);
        let (r, piv) = i.rref();
        assert_eq!(r, i);
        assert_eq!(piv, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rref_gf2_example() {
        let f = gf(2);
        let m = Matrix::from_ints(&f, &[&[1, 1], &[1, 0]]);
        let (r, piv) = m.rref();
        assert_eq!(r, Matrix::identity(&f, 2));
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(3);
        assert_eq!(Matrix::identity(&f, 3).kernel().rows(), 0);
        let k = Matrix::zeros(&f, 3, 3).kernel();
        assert_eq!(k.rank(), 3);
        let k = Matrix::from_ints(&f, &[&[1, 2]]).kernel();
        assert_eq!(k, Matrix::from_ints(&f, &[&[1, 1]]));
    }

    #[test]
    fn inverse_examples() {
        let f3 = gf(3);
        assert_eq!(Matrix::identity(&f3, 3).inverse().unwrap(), Matrix::identity(&f3, 3));
        let two = Matrix::from_ints(&f3, &[&[2]]);
        assert_eq!(two.inverse().unwrap(), two);
        let f2 = gf(2);
        let shear = Matrix::from_ints(&f2, &[&[1, 1], &[0, 1]]);
        assert_eq!(shear.inverse().unwrap(), shear);
        let sing = Matrix::from_ints(&f2, &[&[1, 1], &[1, 1]]);
        assert_eq!(sing.inverse(), Err(Error::SingularMatrix));
        assert!(matches!(
            Matrix::zeros(&f2, 2, 3).inverse(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn rational_inverse() {
        let q = Rationals;
        let m = Matrix::from_ints(&q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert_eq!(inv, Matrix::from_ints(&q, &[&[1, -1], &[-1, 2]]));
        let h = Matrix::from_ints(&q, &[&[1, 2], &[3, 4]]);
        let hi = h.inverse().unwrap();
        assert_eq!(hi.get(1, 0), q.mul(q.from_int(3), q.inv(q.from_int(2)).unwrap()));
    }

    fn random_matrix(field: PrimeField, rows: usize, cols: usize) -> impl Strategy<Value = Matrix<PrimeField>> {
        let p = field.order() as u32;
        proptest::collection::vec(0..p, rows * cols)
            .prop_map(move |data| Matrix::from_vec(&field, rows, cols, data).unwrap())
    }

    fn any_field_matrix() -> impl Strategy<Value = Matrix<PrimeField>> {
        (prop::sample::select(vec![2u32, 3, 5, 7, 13]), 1usize..6, 1usize..6)
            .prop_flat_map(|(p, r, c)| random_matrix(gf(p), r, c))
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in any_field_matrix()) {
            let (r, piv) = m.rref();
            let (rr, piv2) = r.rref();
            prop_assert_eq!(&rr, &r);
            prop_assert_eq!(piv, piv2);
        }

        #[test]
        fn kernel_is_annihilated_and_rank_nullity(m in any_field_matrix()) {
            let k = m.kernel();
            prop_assert_eq!(k.rows() + m.rank(), m.cols());
            let prod = &m * &k.transpose();
            prop_assert!(prod.is_zero());
        }
    }

    #[test]
    fn inverse_of_random_invertible_matrices() {
        // 100 samples per field from a fixed linear congruential stream
        let mut state: u64 = 0x2545_f491_4f6c_dd1d;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as u32
        };
        for p in [2u32, 3, 5, 7, 11, 13] {
            let f = gf(p);
            let mut found = 0;
            while found < 100 {
                let n = 1 + (next() % 5) as usize;
                let m = Matrix::from_fn(&f, n, n, |_, _| next() % p);
                let Ok(inv) = m.inverse() else { continue };
                assert!((&m * &inv).is_identity());
                assert!((&inv * &m).is_identity());
                found += 1;
            }
        }
    }
}
