use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactla::{FiniteField, Matrix};
use crate::modspace::{ModuleSpace, Subspace};

/// Ceiling on |W| for enumeration.
pub const MAX_ENUMERATION_VECTORS: u128 = 10_000;
/// Ceiling on the number of candidate subspaces (indices must fit in u16).
pub const MAX_GRASSMANNIAN: u128 = 60_000;

/// Number of k-dimensional subspaces of GF(q)ⁿ.
pub fn gaussian_binomial(n: u32, k: u32, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// Total number of subspaces of GF(q)ⁿ.
pub fn galois_number(n: u32, q: u128) -> u128 {
    (0..=n).map(|k| gaussian_binomial(n, k, q)).sum()
}

/// All submodules of `space`, ordered by dimension and then by pivot
/// pattern. Each reduced echelon form is generated exactly once.
pub fn enumerate_subspaces<F: FiniteField>(space: &ModuleSpace<F>) -> Result<Vec<Subspace<F>>> {
    let field = space.field();
    let q = field.order() as u128;
    let n = space.dim();
    let vectors = (0..n).try_fold(1u128, |acc, _| acc.checked_mul(q));
    if vectors.is_none_or(|v| v > MAX_ENUMERATION_VECTORS) {
        return Err(Error::TooLarge(format!("GF({q})^{n} has more than {MAX_ENUMERATION_VECTORS} vectors")));
    }
    if galois_number(n as u32, q) > MAX_GRASSMANNIAN {
        return Err(Error::TooLarge(format!("GF({q})^{n} has more than {MAX_GRASSMANNIAN} subspaces")));
    }
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            // free slots: row i, column j > pivots[i], j not a pivot
            let slots: Vec<(usize, usize)> = (0..k)
                .flat_map(|i| {
                    let p = &pivots;
                    (p[i] + 1..n).filter(move |j| !p.contains(j)).map(move |j| (i, j))
                })
                .collect();
            let count = q.pow(slots.len() as u32) as usize;
            for code in 0..count {
                let mut m = Matrix::zeros(field, k, n);
                for (i, &p) in pivots.iter().enumerate() {
                    m.set(i, p, field.one());
                }
                let mut c = code;
                for &(i, j) in &slots {
                    m.set(i, j, field.element(c % q as usize));
                    c /= q as usize;
                }
                let s = Subspace::span_of(&m);
                debug_assert_eq!(s.basis(), &m);
                if space.is_submodule(&s) {
                    out.push(s);
                }
            }
        }
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// An enumerated Grassmannian with index lookup.
#[derive(Clone, Debug)]
pub struct Grassmannian<F: FiniteField> {
    space: ModuleSpace<F>,
    elements: Vec<Subspace<F>>,
    index: HashMap<Subspace<F>, usize>,
}

impl<F: FiniteField> Grassmannian<F> {
    pub fn new(space: ModuleSpace<F>) -> Result<Self> {
        let elements = enumerate_subspaces(&space)?;
        Ok(Self::from_elements(space, elements))
    }

    /// Wraps an explicit list; callers vouch that it is closed under the
    /// operations they evaluate.
    pub fn from_elements(space: ModuleSpace<F>, elements: Vec<Subspace<F>>) -> Self {
        let index = elements.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Grassmannian { space, elements, index }
    }

    pub fn space(&self) -> &ModuleSpace<F> {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Subspace<F>] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Subspace<F> {
        &self.elements[i]
    }

    pub fn index_of(&self, s: &Subspace<F>) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Index of a value known to be a submodule of the space.
    pub fn expect_index(&self, s: &Subspace<F>) -> usize {
        self.index_of(s)
            .unwrap_or_else(|| panic!("{s} is missing from the enumerated Grassmannian"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::PrimeField;

    #[test]
    fn galois_numbers() {
        assert_eq!(galois_number(2, 2), 5);
        assert_eq!(galois_number(3, 2), 16);
        assert_eq!(galois_number(4, 2), 67);
        assert_eq!(galois_number(2, 3), 6);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
    }

    #[test]
    fn counts_match_galois_numbers() {
        for (p, n) in [(2u32, 1usize), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
            let w = ModuleSpace::vector_space(PrimeField::new(p).unwrap(), n);
            let subs = enumerate_subspaces(&w).unwrap();
            assert_eq!(subs.len() as u128, galois_number(n as u32, p as u128));
            let g = Grassmannian::from_elements(w, subs);
            assert_eq!(g.index.len(), g.len(), "duplicates for GF({p})^{n}");
        }
    }

    #[test]
    fn rejects_large_spaces() {
        let w = ModuleSpace::vector_space(PrimeField::new(2).unwrap(), 14);
        assert!(matches!(enumerate_subspaces(&w), Err(Error::TooLarge(_))));
    }
}
