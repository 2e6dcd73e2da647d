//! Linear relations r ⊂ W ⊕ W′, their calculus, and structural pairs of
//! maps between enumerated Grassmannians.

use crate::error::{Error, Result};
use crate::exactla::{Field, FiniteField, Matrix};
use crate::modspace::{ModuleSpace, Subspace};
use crate::oracle::{scan_tuples, CheckReport, Failure, Grassmannian, Quintary, SplitMix64};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRelation<F: Field> {
    source: ModuleSpace<F>,
    target: ModuleSpace<F>,
    graph: Subspace<F>,
}

/// Kernel of a block system in which every piece is an annihilator applied
/// to the sum of the blocks starting at the listed column offsets, then
/// projected to the columns in `keep`.
fn solve_project<F: Field>(field: &F, cols: usize, pieces: &[(&Matrix<F>, &[usize])], keep: &[std::ops::Range<usize>]) -> Subspace<F> {
    let rows: usize = pieces.iter().map(|(m, _)| m.rows()).sum();
    let mut sys = Matrix::zeros(field, rows, cols);
    let mut r0 = 0;
    for (ann, offsets) in pieces {
        for r in 0..ann.rows() {
            for &off in offsets.iter() {
                for c in 0..ann.cols() {
                    let v = field.add(sys.get(r0 + r, off + c), ann.get(r, c));
                    sys.set(r0 + r, off + c, v);
                }
            }
        }
        r0 += ann.rows();
    }
    let k = sys.kernel();
    let mut proj: Option<Matrix<F>> = None;
    for range in keep {
        let part = k.submatrix(0..k.rows(), range.clone());
        proj = Some(match proj {
            None => part,
            Some(p) => p.hstack(&part),
        });
    }
    Subspace::span_of(&proj.expect("at least one kept block"))
}

impl<F: Field> LinearRelation<F> {
    /// Wraps a graph, checking that it is a submodule of W ⊕ W′.
    pub fn new(source: ModuleSpace<F>, target: ModuleSpace<F>, graph: Subspace<F>) -> Result<Self> {
        if graph.ambient_dim() != source.dim() + target.dim() {
            return Err(Error::MixedSpaces);
        }
        let sum = source.direct_sum(&target)?;
        sum.subspace_from_matrix(graph.basis())?;
        Ok(LinearRelation { source, target, graph })
    }

    /// Graph {(v, f v)} of the column-action matrix `f` (target.dim × source.dim).
    pub fn graph_of_map(source: &ModuleSpace<F>, target: &ModuleSpace<F>, f: &Matrix<F>) -> Result<Self> {
        if (f.rows(), f.cols()) != (target.dim(), source.dim()) {
            return Err(Error::ShapeMismatch(format!(
                "map must be {}x{}, got {}x{}",
                target.dim(),
                source.dim(),
                f.rows(),
                f.cols()
            )));
        }
        let rows = Matrix::identity(source.field(), source.dim()).hstack(&f.transpose());
        Self::new(source.clone(), target.clone(), Subspace::span_of(&rows))
    }

    /// The diagonal of W ⊕ W.
    pub fn identity(space: &ModuleSpace<F>) -> Self {
        Self::graph_of_map(space, space, &Matrix::identity(space.field(), space.dim())).expect("identity is linear")
    }

    /// W × 0, the graph of the zero map.
    pub fn zero_map(source: &ModuleSpace<F>, target: &ModuleSpace<F>) -> Self {
        Self::graph_of_map(source, target, &Matrix::zeros(source.field(), target.dim(), source.dim()))
            .expect("zero map is linear")
    }

    pub fn source(&self) -> &ModuleSpace<F> {
        &self.source
    }

    pub fn target(&self) -> &ModuleSpace<F> {
        &self.target
    }

    pub fn graph(&self) -> &Subspace<F> {
        &self.graph
    }

    fn field(&self) -> &F {
        self.source.field()
    }

    /// The column-action matrix of the map, if the relation is the graph of one.
    pub fn as_map(&self) -> Option<Matrix<F>> {
        let (n, m) = (self.source.dim(), self.target.dim());
        if self.graph.dim() != n {
            return None;
        }
        let b = self.graph.basis();
        let left = b.submatrix(0..n, 0..n);
        let right = b.submatrix(0..n, n..n + m);
        let li = left.inverse().ok()?;
        Some((&li * &right).transpose())
    }

    /// s ∘ t = {(u, w) | ∃v: (u, v) ∈ t, (v, w) ∈ s}.
    pub fn compose(s: &Self, t: &Self) -> Result<Self> {
        if s.source != t.target {
            return Err(Error::MixedSpaces);
        }
        let (na, nb, nc) = (t.source.dim(), t.target.dim(), s.target.dim());
        let graph = solve_project(
            t.field(),
            na + nb + nc,
            &[(t.graph.annihilator(), &[0]), (s.graph.annihilator(), &[na])],
            &[0..na, na + nb..na + nb + nc],
        );
        Ok(LinearRelation { source: t.source.clone(), target: s.target.clone(), graph })
    }

    /// {(w, v) | (v, w) ∈ r}.
    pub fn reverse(&self) -> Self {
        let (n, m) = (self.source.dim(), self.target.dim());
        let b = self.graph.basis();
        let swapped = b.submatrix(0..b.rows(), n..n + m).hstack(&b.submatrix(0..b.rows(), 0..n));
        LinearRelation {
            source: self.target.clone(),
            target: self.source.clone(),
            graph: Subspace::span_of(&swapped),
        }
    }

    /// z y⁻¹ x.
    pub fn ternary(x: &Self, y: &Self, z: &Self) -> Result<Self> {
        if x.source != y.source || y.source != z.source || x.target != y.target || y.target != z.target {
            return Err(Error::MixedSpaces);
        }
        Self::compose(z, &Self::compose(&y.reverse(), x)?)
    }

    /// r(x) = {w | ∃v ∈ x: (v, w) ∈ r}.
    pub fn pushforward(&self, x: &Subspace<F>) -> Result<Subspace<F>> {
        self.source.check(x)?;
        let (n, m) = (self.source.dim(), self.target.dim());
        Ok(solve_project(
            self.field(),
            n + m,
            &[(x.annihilator(), &[0]), (self.graph.annihilator(), &[0])],
            &[n..n + m],
        ))
    }

    /// r⁻¹(y) = {v | ∃w ∈ y: (v, w) ∈ r}.
    pub fn pullback(&self, y: &Subspace<F>) -> Result<Subspace<F>> {
        self.reverse().pushforward(y)
    }

    /// Pushforward and pullback as index tables between two enumerations.
    pub fn tables(&self, src: &Grassmannian<F>, tgt: &Grassmannian<F>) -> Result<(Vec<usize>, Vec<usize>)>
    where
        F: FiniteField,
    {
        let push = src
            .elements()
            .iter()
            .map(|x| self.pushforward(x).map(|v| tgt.expect_index(&v)))
            .collect::<Result<Vec<_>>>()?;
        let pull = tgt
            .elements()
            .iter()
            .map(|y| self.pullback(y).map(|v| src.expect_index(&v)))
            .collect::<Result<Vec<_>>>()?;
        Ok((push, pull))
    }
}

impl<F: FiniteField> LinearRelation<F> {
    /// A relation spanned by 0..=dim random vectors of W ⊕ W′ (closed up to a
    /// submodule).
    pub fn random(source: &ModuleSpace<F>, target: &ModuleSpace<F>, rng: &mut SplitMix64) -> Result<Self> {
        let f = source.field();
        let sum = source.direct_sum(target)?;
        let n = sum.dim();
        let k = rng.below(n + 1);
        let m = Matrix::from_fn(f, k, n, |_, _| f.element(rng.below(f.order())));
        Self::new(source.clone(), target.clone(), sum.submodule_generated(&m))
    }
}

/// l_{x,a,y,b} = {(ζ, ω) | ∃ξ ∈ x: ω+ζ ∈ a, ω+ζ+ξ ∈ y, ω+ξ ∈ b}.
pub fn left_mult_relation<F: Field>(
    space: &ModuleSpace<F>,
    x: &Subspace<F>,
    a: &Subspace<F>,
    y: &Subspace<F>,
    b: &Subspace<F>,
) -> Result<LinearRelation<F>> {
    for s in [x, a, y, b] {
        space.check(s)?;
    }
    let n = space.dim();
    // unknowns (ζ, ω, ξ)
    let graph = solve_project(
        space.field(),
        3 * n,
        &[
            (a.annihilator(), &[0, n]),
            (y.annihilator(), &[0, n, 2 * n]),
            (b.annihilator(), &[n, 2 * n]),
            (x.annihilator(), &[2 * n]),
        ],
        &[0..2 * n],
    );
    Ok(LinearRelation { source: space.clone(), target: space.clone(), graph })
}

/// Checks that (f, g) is a structural pair between the geometries behind
/// `gamma` and `gamma2`, from the map tables `f: 𝒳 → 𝒳′` and `g: 𝒳′ → 𝒳`:
///
/// f Γ(x, g a′, y, g b′, z) = Γ′(f x, a′, f y, b′, f z)
/// g Γ′(x′, f a, y′, f b, z′) = Γ(g x′, a, g y′, b, g z′)
///
/// Each identity is scanned on its own tuple space, exhaustively when it
/// fits the budget.
#[allow(clippy::too_many_arguments)]
pub fn is_structural_pair<F: FiniteField, Q: Quintary, Q2: Quintary>(
    name: &str,
    f: &[usize],
    g: &[usize],
    grass: &Grassmannian<F>,
    gamma: &Q,
    grass2: &Grassmannian<F>,
    gamma2: &Q2,
    budget: u64,
    seed: u64,
) -> Vec<CheckReport> {
    let (n, n2) = (gamma.size(), gamma2.size());
    assert_eq!(f.len(), n, "f must be total on the source");
    assert_eq!(g.len(), n2, "g must be total on the target");
    let lit = |gr: &Grassmannian<F>, i: usize| gr.get(i).to_literal();
    let forward = scan_tuples(&format!("{name}: f side"), &[n, n2, n, n2, n], budget, seed, |t| {
        let (x, a2, y, b2, z) = (t[0], t[1], t[2], t[3], t[4]);
        let lhs = f[gamma.gamma(x, g[a2], y, g[b2], z)];
        let rhs = gamma2.gamma(f[x], a2, f[y], b2, f[z]);
        Some(if lhs == rhs {
            Ok(())
        } else {
            Err(Failure {
                tuple: vec![lit(grass, x), lit(grass2, a2), lit(grass, y), lit(grass2, b2), lit(grass, z)],
                expected: lit(grass2, rhs),
                actual: lit(grass2, lhs),
            })
        })
    });
    let backward = scan_tuples(&format!("{name}: g side"), &[n2, n, n2, n, n2], budget, seed, |t| {
        let (x2, a, y2, b, z2) = (t[0], t[1], t[2], t[3], t[4]);
        let lhs = g[gamma2.gamma(x2, f[a], y2, f[b], z2)];
        let rhs = gamma.gamma(g[x2], a, g[y2], b, g[z2]);
        Some(if lhs == rhs {
            Ok(())
        } else {
            Err(Failure {
                tuple: vec![lit(grass2, x2), lit(grass, a), lit(grass2, y2), lit(grass, b), lit(grass2, z2)],
                expected: lit(grass, rhs),
                actual: lit(grass, lhs),
            })
        })
    });
    vec![forward, backward]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::PrimeField;
    use crate::gamma::{gamma_extended, l_operator};
    use crate::modspace::transversal;
    use crate::oracle::GammaTable;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn line(f: &PrimeField, v: &[i64]) -> Subspace<PrimeField> {
        Subspace::span_of(&Matrix::from_ints(f, &[v]))
    }

    #[test]
    fn graphs_compose_to_products() {
        let f = gf(3);
        let w = ModuleSpace::vector_space(f.clone(), 2);
        let p = Matrix::from_ints(&f, &[&[1, 2], &[0, 1]]);
        let q = Matrix::from_ints(&f, &[&[2, 0], &[1, 1]]);
        let rp = LinearRelation::graph_of_map(&w, &w, &p).unwrap();
        let rq = LinearRelation::graph_of_map(&w, &w, &q).unwrap();
        let c = LinearRelation::compose(&rq, &rp).unwrap();
        assert_eq!(c.as_map().unwrap(), &q * &p);
        let id = LinearRelation::identity(&w);
        assert_eq!(LinearRelation::compose(&id, &rp).unwrap(), rp);
        assert_eq!(LinearRelation::compose(&rp, &id).unwrap(), rp);
    }

    #[test]
    fn zero_after_one_over_gf2() {
        let f = gf(2);
        let w = ModuleSpace::vector_space(f.clone(), 1);
        let zero = LinearRelation::graph_of_map(&w, &w, &Matrix::from_ints(&f, &[&[0]])).unwrap();
        let one = LinearRelation::graph_of_map(&w, &w, &Matrix::from_ints(&f, &[&[1]])).unwrap();
        assert_eq!(LinearRelation::compose(&zero, &one).unwrap(), LinearRelation::zero_map(&w, &w));
    }

    #[test]
    fn reverse_examples() {
        let f = gf(3);
        let w1 = ModuleSpace::vector_space(f.clone(), 1);
        let two = LinearRelation::graph_of_map(&w1, &w1, &Matrix::from_ints(&f, &[&[2]])).unwrap();
        assert_eq!(two.reverse(), two);
        let id = LinearRelation::identity(&w1);
        assert_eq!(id.reverse(), id);
        let w = ModuleSpace::vector_space(f.clone(), 2);
        let m = Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
        let r = LinearRelation::graph_of_map(&w, &w, &m).unwrap();
        assert_eq!(r.reverse().reverse(), r);
        assert_eq!(r.reverse().as_map().unwrap(), m.inverse().unwrap());
    }

    #[test]
    fn composition_is_associative_and_reverses() {
        let f = gf(2);
        let w = ModuleSpace::vector_space(f.clone(), 2);
        let w3 = ModuleSpace::vector_space(f.clone(), 3);
        let mut rng = SplitMix64::new(11);
        for _ in 0..200 {
            let x = LinearRelation::random(&w, &w3, &mut rng).unwrap();
            let y = LinearRelation::random(&w3, &w, &mut rng).unwrap();
            let z = LinearRelation::random(&w, &w3, &mut rng).unwrap();
            let left = LinearRelation::compose(&LinearRelation::compose(&z, &y).unwrap(), &x).unwrap();
            let right = LinearRelation::compose(&z, &LinearRelation::compose(&y, &x).unwrap()).unwrap();
            assert_eq!(left, right);
            let yx = LinearRelation::compose(&y, &x).unwrap();
            assert_eq!(yx.reverse(), LinearRelation::compose(&x.reverse(), &y.reverse()).unwrap());
        }
    }

    #[test]
    fn compose_rejects_mismatched_spaces() {
        let f = gf(2);
        let w1 = ModuleSpace::vector_space(f.clone(), 1);
        let w2 = ModuleSpace::vector_space(f.clone(), 2);
        let a = LinearRelation::identity(&w1);
        let b = LinearRelation::identity(&w2);
        assert_eq!(LinearRelation::compose(&a, &b), Err(Error::MixedSpaces));
    }

    #[test]
    fn ternary_of_bijection() {
        let f = gf(3);
        let w = ModuleSpace::vector_space(f.clone(), 2);
        let m = Matrix::from_ints(&f, &[&[0, 1], &[2, 1]]);
        let r = LinearRelation::graph_of_map(&w, &w, &m).unwrap();
        assert_eq!(LinearRelation::ternary(&r, &r, &r).unwrap(), r);
    }

    #[test]
    fn ternary_matches_gamma_on_complements() {
        // W = A ⊕ B with a = A, b = B; relations A → B that are graphs are
        // exactly the complements of b.
        let f = gf(3);
        let a1 = ModuleSpace::vector_space(f.clone(), 1);
        let (a, b) = (line(&f, &[1, 0]), line(&f, &[0, 1]));
        let graphs: Vec<_> = (0..3)
            .map(|s| LinearRelation::graph_of_map(&a1, &a1, &Matrix::from_ints(&f, &[&[s]])).unwrap())
            .collect();
        for x in &graphs {
            for y in &graphs {
                for z in &graphs {
                    let t = LinearRelation::ternary(x, y, z).unwrap();
                    let g = gamma_extended(x.graph(), &a, y.graph(), &b, z.graph());
                    assert_eq!(t.graph(), &g);
                }
            }
        }
    }

    #[test]
    fn pushforward_examples() {
        let f = gf(3);
        let w = ModuleSpace::vector_space(f.clone(), 2);
        let x = line(&f, &[1, 2]);
        assert_eq!(LinearRelation::identity(&w).pushforward(&x).unwrap(), x);
        assert!(LinearRelation::zero_map(&w, &w).pushforward(&x).unwrap().is_zero());
        let m = Matrix::from_ints(&f, &[&[1, 1], &[0, 0]]);
        let r = LinearRelation::graph_of_map(&w, &w, &m).unwrap();
        assert_eq!(r.pushforward(&x).unwrap(), x.image(&m));
        // f⁻¹(⟨e1⟩) = W, f⁻¹(0) = ker f = ⟨(1,2)⟩
        assert!(r.pullback(&line(&f, &[1, 0])).unwrap().is_full());
        assert_eq!(r.pullback(&w.zero()).unwrap(), line(&f, &[1, 2]));
    }

    #[test]
    fn left_mult_relation_properties() {
        let f = gf(2);
        let w = ModuleSpace::vector_space(f.clone(), 3);
        let g = Grassmannian::new(w.clone()).unwrap();
        let e = g.elements();
        for x in e {
            for a in e {
                for y in e {
                    for b in e {
                        let l = left_mult_relation(&w, x, a, y, b).unwrap();
                        assert_eq!(l.reverse(), left_mult_relation(&w, y, a, x, b).unwrap());
                        for z in e {
                            assert_eq!(l.pushforward(z).unwrap(), gamma_extended(x, a, y, b, z));
                        }
                        if transversal(x, a) && transversal(y, b) {
                            let op = l_operator(x, a, y, b).unwrap();
                            assert_eq!(l.as_map().unwrap(), op.into_matrix());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn identity_pair_is_structural() {
        let w = ModuleSpace::vector_space(gf(2), 2);
        let g = Grassmannian::new(w).unwrap();
        let t = GammaTable::build(&g).unwrap();
        let id: Vec<usize> = (0..g.len()).collect();
        for c in is_structural_pair("id", &id, &id, &g, &t, &g, &t, 1 << 20, 0) {
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn non_structural_pair_is_caught() {
        let w = ModuleSpace::vector_space(gf(2), 2);
        let g = Grassmannian::new(w).unwrap();
        let t = GammaTable::build(&g).unwrap();
        let id: Vec<usize> = (0..g.len()).collect();
        // swapping 0 and W is not structural
        let mut f = id.clone();
        f.swap(0, g.len() - 1);
        let reports = is_structural_pair("swap", &f, &id, &g, &t, &g, &t, 1 << 20, 0);
        assert!(reports.iter().any(|c| !c.passed()));
    }
}
