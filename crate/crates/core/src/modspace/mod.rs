//! Ambient module spaces and their lattices of submodules.
//!
//! A [`ModuleSpace`] is 𝕂ⁿ together with matrices `g` acting on row vectors
//! by `v ↦ v·g`; a submodule is a subspace stable under every `g`. With no
//! generators the algebra is 𝕂 itself and every subspace qualifies.

mod literal;
mod subspace;

pub use literal::{parse_rows, parse_space, parse_subspace_literal, FieldToken, SpaceDescription, SpaceLiteral};
pub use subspace::Subspace;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpace<F: Field> {
    field: F,
    dim: usize,
    generators: Vec<Matrix<F>>,
}

impl<F: Field> ModuleSpace<F> {
    pub fn new(field: F, dim: usize, generators: Vec<Matrix<F>>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::ShapeMismatch(format!(
                    "generator {i} is {}x{}, expected {dim}x{dim}",
                    g.rows(),
                    g.cols()
                )));
            }
        }
        Ok(ModuleSpace { field, dim, generators })
    }

    /// 𝕂ⁿ with the trivial algebra 𝔹 = 𝕂.
    pub fn vector_space(field: F, dim: usize) -> Self {
        ModuleSpace { field, dim, generators: Vec::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix<F>] {
        &self.generators
    }

    /// Checks that `x` lives in this space.
    pub fn check(&self, x: &Subspace<F>) -> Result<()> {
        if x.ambient_dim() != self.dim {
            return Err(Error::MixedSpaces);
        }
        Ok(())
    }

    fn invariance_failure(&self, x: &Subspace<F>) -> Option<usize> {
        self.generators
            .iter()
            .position(|g| !x.right_image(g).is_subspace_of(x))
    }

    pub fn is_submodule(&self, x: &Subspace<F>) -> bool {
        x.ambient_dim() == self.dim && self.invariance_failure(x).is_none()
    }

    /// Span of `rows`, rejected unless it is a submodule.
    pub fn subspace(&self, rows: &[Vec<F::Elem>]) -> Result<Subspace<F>> {
        let m = Matrix::from_rows(&self.field, self.dim, rows)?;
        self.subspace_from_matrix(&m)
    }

    pub fn subspace_from_matrix(&self, m: &Matrix<F>) -> Result<Subspace<F>> {
        if m.cols() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "vectors of length {}, expected {}",
                m.cols(),
                self.dim
            )));
        }
        let x = Subspace::span_of(m);
        match self.invariance_failure(&x) {
            Some(generator) => Err(Error::NotASubmodule { generator }),
            None => Ok(x),
        }
    }

    pub fn subspace_from_ints(&self, rows: &[&[i64]]) -> Result<Subspace<F>> {
        let rows: Vec<Vec<F::Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| self.field.from_int(v)).collect())
            .collect();
        self.subspace(&rows)
    }

    /// Smallest submodule containing `rows`.
    pub fn submodule_generated(&self, rows: &Matrix<F>) -> Subspace<F> {
        let mut x = Subspace::span_of(rows);
        loop {
            let mut grown = x.basis().clone();
            for g in &self.generators {
                grown = grown.vstack(&(x.basis() * g));
            }
            let next = Subspace::span_of(&grown);
            if next.dim() == x.dim() {
                return x;
            }
            x = next;
        }
    }

    pub fn zero(&self) -> Subspace<F> {
        Subspace::zero(&self.field, self.dim)
    }

    pub fn full(&self) -> Subspace<F> {
        Subspace::full(&self.field, self.dim)
    }

    pub fn meet(&self, x: &Subspace<F>, y: &Subspace<F>) -> Result<Subspace<F>> {
        self.check(x)?;
        self.check(y)?;
        Ok(meet(x, y))
    }

    pub fn join(&self, x: &Subspace<F>, y: &Subspace<F>) -> Result<Subspace<F>> {
        self.check(x)?;
        self.check(y)?;
        Ok(join(x, y))
    }

    pub fn is_transversal(&self, x: &Subspace<F>, a: &Subspace<F>) -> Result<bool> {
        self.check(x)?;
        self.check(a)?;
        Ok(transversal(x, a))
    }

    pub fn complements(&self, a: &Subspace<F>, universe: &[Subspace<F>]) -> Vec<Subspace<F>> {
        universe.iter().filter(|x| transversal(x, a)).cloned().collect()
    }

    pub fn common_complements(
        &self,
        a: &Subspace<F>,
        b: &Subspace<F>,
        universe: &[Subspace<F>],
    ) -> Vec<Subspace<F>> {
        universe
            .iter()
            .filter(|x| transversal(x, a) && transversal(x, b))
            .cloned()
            .collect()
    }

    /// Classes of the equivalence generated by "has a common complement",
    /// as lists of indices into `universe`, ordered by first member.
    pub fn connected_components(&self, universe: &[Subspace<F>]) -> Vec<Vec<usize>> {
        let n = universe.len();
        let mut uf = UnionFind::<usize>::new(n);
        let comp: Vec<Vec<bool>> = universe
            .iter()
            .map(|x| universe.iter().map(|c| transversal(x, c)).collect())
            .collect();
        for i in 0..n {
            for j in i + 1..n {
                if uf.equiv(i, j) {
                    continue;
                }
                if (0..n).any(|c| comp[i][c] && comp[j][c]) {
                    uf.union(i, j);
                }
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut slot: Vec<Option<usize>> = vec![None; n];
        for i in 0..n {
            let root = uf.find(i);
            match slot[root] {
                Some(k) => classes[k].push(i),
                None => {
                    slot[root] = Some(classes.len());
                    classes.push(vec![i]);
                }
            }
        }
        classes
    }

    /// W ⊕ W′ with blockwise action. Both spaces need the same number of
    /// generators, which are paired up in order.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.generators.len() != other.generators.len() {
            return Err(Error::MixedSpaces);
        }
        let generators = self
            .generators
            .iter()
            .zip(&other.generators)
            .map(|(g, h)| g.block_diag(h))
            .collect();
        ModuleSpace::new(self.field.clone(), self.dim + other.dim, generators)
    }
}

/// Intersection, read off the kernel of the stacked annihilators.
pub fn meet<F: Field>(x: &Subspace<F>, y: &Subspace<F>) -> Subspace<F> {
    Subspace::span_of(&x.annihilator().vstack(y.annihilator()).kernel())
}

/// Sum of subspaces.
pub fn join<F: Field>(x: &Subspace<F>, y: &Subspace<F>) -> Subspace<F> {
    Subspace::span_of(&x.basis().vstack(y.basis()))
}

/// x ⊕ a = W.
pub fn transversal<F: Field>(x: &Subspace<F>, a: &Subspace<F>) -> bool {
    x.dim() + a.dim() == x.ambient_dim() && join(x, a).is_full()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::PrimeField;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// M₂(GF(2)) as a right module over itself, coordinates (e11,e12,e21,e22).
    pub(crate) fn matrix_algebra_gf2() -> ModuleSpace<PrimeField> {
        let f = gf(2);
        let mut gens = Vec::new();
        for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            // right multiplication by e_ij: e_kl e_ij = δ_li e_kj
            let mut g = Matrix::zeros(&f, 4, 4);
            for k in 0..2 {
                g.set(2 * k + i, 2 * k + j, 1);
            }
            gens.push(g);
        }
        ModuleSpace::new(f, 4, gens).unwrap()
    }

    #[test]
    fn subspace_examples() {
        let w = ModuleSpace::vector_space(gf(2), 2);
        assert_eq!(w.subspace(&[]).unwrap().dim(), 0);
        assert_eq!(w.subspace_from_ints(&[&[1, 0], &[1, 1]]).unwrap(), w.full());

        let a = matrix_algebra_gf2();
        let ideal = a.subspace_from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]).unwrap();
        assert_eq!(ideal.dim(), 2);
        assert!(matches!(
            a.subspace_from_ints(&[&[1, 0, 0, 0]]),
            Err(Error::NotASubmodule { .. })
        ));
        // a left ideal is not a right ideal
        assert!(a.subspace_from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]).is_err());
    }

    #[test]
    fn meet_join_examples() {
        let w = ModuleSpace::vector_space(gf(2), 2);
        let e1 = w.subspace_from_ints(&[&[1, 0]]).unwrap();
        let e2 = w.subspace_from_ints(&[&[0, 1]]).unwrap();
        assert_eq!(w.join(&e1, &e2).unwrap(), w.full());
        assert_eq!(w.meet(&e1, &e2).unwrap(), w.zero());
        assert_eq!(w.meet(&e1, &w.full()).unwrap(), e1);
        assert_eq!(w.join(&e1, &w.zero()).unwrap(), e1);

        let w3 = ModuleSpace::vector_space(gf(2), 3);
        let u = w3.subspace_from_ints(&[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        let v = w3.subspace_from_ints(&[&[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(w3.meet(&u, &v).unwrap(), w3.subspace_from_ints(&[&[0, 1, 0]]).unwrap());
        assert_eq!(w.meet(&e1, &u), Err(Error::MixedSpaces));
    }

    #[test]
    fn transversality_examples() {
        let w = ModuleSpace::vector_space(gf(2), 2);
        let e1 = w.subspace_from_ints(&[&[1, 0]]).unwrap();
        let e2 = w.subspace_from_ints(&[&[0, 1]]).unwrap();
        assert!(!w.is_transversal(&e1, &e1).unwrap());
        assert!(w.is_transversal(&e1, &e2).unwrap());
        assert!(w.is_transversal(&w.zero(), &w.full()).unwrap());
    }

    #[test]
    fn complements_in_the_plane() {
        let w = ModuleSpace::vector_space(gf(2), 2);
        let lines: Vec<_> = [[1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|v| w.subspace_from_ints(&[v]).unwrap())
            .collect();
        let mut universe = vec![w.zero(), w.full()];
        universe.extend(lines.iter().cloned());
        let mut c = w.complements(&lines[1], &universe);
        c.sort();
        let mut expected = vec![lines[0].clone(), lines[2].clone()];
        expected.sort();
        assert_eq!(c, expected);
        assert_eq!(w.common_complements(&lines[1], &lines[1], &universe), w.complements(&lines[1], &universe));
        assert_eq!(w.common_complements(&lines[0], &lines[1], &universe), vec![lines[2].clone()]);
        assert_eq!(w.connected_components(&[w.zero()]), vec![vec![0]]);
    }
}
