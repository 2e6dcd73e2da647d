use serde::{Deserialize, Serialize};

use super::extract::extract_pair;
use super::{add_vec, fmt_vec, scale_vec, solve, unit_vec, AssociativePair, PairOrigin, PeirceDecomposition, Sign, UnitalAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Field, FiniteField, Matrix};
use crate::modspace::{ModuleSpace, Subspace};
use crate::oracle::{scan_tuples, CheckReport, Failure, GammaOracle, Grassmannian};

/// Â with an idempotent e, realized as the right Â-module Â over 𝕂, and
/// the canonical injections A⁺ → fÂe, A⁻ → eÂf.
#[derive(Clone, Debug)]
pub struct StandardImbedding<F: Field> {
    algebra: UnitalAlgebra<F>,
    idempotent: Vec<F::Elem>,
    space: ModuleSpace<F>,
    o_plus: Subspace<F>,
    o_minus: Subspace<F>,
    diagonal: Option<Subspace<F>>,
    plus_embed: Vec<Vec<F::Elem>>,
    minus_embed: Vec<Vec<F::Elem>>,
}

impl<F: Field> StandardImbedding<F> {
    pub fn of_algebra(alg: &UnitalAlgebra<F>) -> Result<Self> {
        standard_imbedding_geometry(&AssociativePair::from_algebra(alg))
    }

    pub fn algebra(&self) -> &UnitalAlgebra<F> {
        &self.algebra
    }

    pub fn idempotent(&self) -> &[F::Elem] {
        &self.idempotent
    }

    pub fn space(&self) -> &ModuleSpace<F> {
        &self.space
    }

    /// eÂ
    pub fn o_plus(&self) -> &Subspace<F> {
        &self.o_plus
    }

    /// fÂ with f = 1 − e
    pub fn o_minus(&self) -> &Subspace<F> {
        &self.o_minus
    }

    /// (e + 1₀₁)Â for algebra pairs, where 1₀₁ is the unit of 𝔸 placed in fÂe.
    pub fn diagonal(&self) -> Option<&Subspace<F>> {
        self.diagonal.as_ref()
    }

    pub fn peirce(&self) -> Result<PeirceDecomposition<F>> {
        self.algebra.peirce(&self.idempotent)
    }

    /// Image in Â of the i-th basis vector of A^σ.
    pub fn embed(&self, sign: Sign, coords: &[F::Elem]) -> Vec<F::Elem> {
        let rows = match sign {
            Sign::Plus => &self.plus_embed,
            Sign::Minus => &self.minus_embed,
        };
        super::combine(self.algebra.field(), self.algebra.dim(), coords, rows)
    }

    /// Right ideal uÂ.
    fn right_ideal(alg: &UnitalAlgebra<F>, u: &[F::Elem]) -> Subspace<F> {
        let n = alg.dim();
        let rows: Vec<Vec<F::Elem>> = (0..n).map(|i| alg.product(u, &alg.algebra().basis_vector(i))).collect();
        Subspace::span_of(&Matrix::from_rows(alg.field(), n, &rows).expect("row lengths"))
    }
}

/// Block-matrix imbedding: End(E ⊕ F) for operator pairs, M(2, 2; 𝔸) for
/// algebra pairs. Right ideals of Â are the submodules for the right
/// multiplications by a basis of Â.
pub fn standard_imbedding_geometry<F: Field>(p: &AssociativePair<F>) -> Result<StandardImbedding<F>> {
    let field = p.field().clone();
    let (algebra, idempotent, plus_embed, minus_embed, diag_unit) = match p.origin() {
        PairOrigin::Abstract => {
            return Err(Error::UnsupportedPair("only algebra and operator pairs carry a block-matrix imbedding".into()));
        }
        PairOrigin::Operator { e, f } => {
            let (e, f) = (*e, *f);
            let n = e + f;
            let alg = UnitalAlgebra::matrix_algebra(field.clone(), n);
            let d = n * n;
            let idem = super::combine(&field, d, &vec![field.one(); e], &(0..e).map(|i| unit_vec(&field, d, i * n + i)).collect::<Vec<_>>());
            let plus = (0..f * e).map(|i| unit_vec(&field, d, (e + i / e) * n + i % e)).collect();
            let minus = (0..e * f).map(|i| unit_vec(&field, d, (i / f) * n + e + i % f)).collect();
            (alg, idem, plus, minus, None)
        }
        PairOrigin::Algebra(a) => {
            let d = a.dim();
            let alg = a.two_by_two();
            let n = alg.dim();
            let mut idem = vec![field.zero(); n];
            idem[..d].copy_from_slice(a.unit());
            let plus = (0..d).map(|k| unit_vec(&field, n, 2 * d + k)).collect();
            let minus = (0..d).map(|k| unit_vec(&field, n, d + k)).collect();
            let mut one10 = vec![field.zero(); n];
            one10[2 * d..3 * d].copy_from_slice(a.unit());
            (alg, idem, plus, minus, Some(one10))
        }
    };
    let n = algebra.dim();
    let basis: Vec<Vec<F::Elem>> = (0..n).map(|i| algebra.algebra().basis_vector(i)).collect();
    let generators = basis
        .iter()
        .map(|bk| {
            let rows: Vec<Vec<F::Elem>> = basis.iter().map(|bi| algebra.product(bi, bk)).collect();
            Matrix::from_rows(&field, n, &rows)
        })
        .collect::<Result<Vec<_>>>()?;
    let space = ModuleSpace::new(field.clone(), n, generators)?;
    let f_idem = add_vec(&field, algebra.unit(), &scale_vec(&field, field.neg(field.one()), &idempotent));
    let o_plus = StandardImbedding::right_ideal(&algebra, &idempotent);
    let o_minus = StandardImbedding::right_ideal(&algebra, &f_idem);
    let diagonal = diag_unit.map(|c| StandardImbedding::right_ideal(&algebra, &add_vec(&field, &idempotent, &c)));
    Ok(StandardImbedding { algebra, idempotent, space, o_plus, o_minus, diagonal, plus_embed, minus_embed })
}

/// Outcome of imbedding a pair and extracting it again.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoundTrip {
    pub holds: bool,
    /// Number of right ideals of Â.
    pub ideals: usize,
    /// (element of U_{o⁻}, its image φ(e) in A⁺ coordinates)
    pub plus_map: Vec<(String, String)>,
    /// (element of U_{o⁺}, its image ψ(f) in A⁻ coordinates)
    pub minus_map: Vec<(String, String)>,
    pub checks: Vec<CheckReport>,
}

/// Builds the standard imbedding, extracts the pair at (eÂ, fÂ) and checks
/// that the maps x ↦ φ(e) (where x is the graph of φ: eÂ → fÂ) and
/// y ↦ ψ(f) are linear bijections onto A± intertwining both triples.
pub fn pair_roundtrip_check<F: FiniteField>(p: &AssociativePair<F>, budget: u64, seed: u64) -> Result<RoundTrip> {
    let imb = standard_imbedding_geometry(p)?;
    let field = p.field();
    let grass = Grassmannian::new(imb.space.clone())?;
    let gamma = GammaOracle::new(&grass);
    let ext = extract_pair(&grass, &gamma, &imb.o_plus, &imb.o_minus, budget, seed)?;
    let f_idem = add_vec(field, imb.algebra.unit(), &scale_vec(field, field.neg(field.one()), &imb.idempotent));
    let mut checks = ext.checks().to_vec();
    let mut maps: Vec<Vec<Option<Vec<F::Elem>>>> = Vec::new();
    let mut listings = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        // x ⊤ (other ideal): decompose the idempotent as (element of x) + (element of other)
        let (idem, other, embeds) = match sign {
            Sign::Plus => (&imb.idempotent, &imb.o_minus, &imb.plus_embed),
            Sign::Minus => (&f_idem, &imb.o_plus, &imb.minus_embed),
        };
        let d = imb.algebra.dim();
        let embed_cols = Matrix::from_fn(field, d, embeds.len(), |r, c| embeds[c][r]);
        let carrier = ext.carrier(sign);
        let image: Vec<Option<Vec<F::Elem>>> = carrier
            .ids()
            .iter()
            .map(|&id| {
                let x = grass.get(id);
                let stacked = x.basis().vstack(other.basis());
                let lambda = solve(&stacked.transpose(), idem)?;
                let mu = &lambda[x.dim()..];
                let w = other.basis().apply_row(mu);
                let c = scale_vec(field, field.neg(field.one()), &w);
                solve(&embed_cols, &c)
            })
            .collect();
        listings.push(
            carrier
                .ids()
                .iter()
                .zip(&image)
                .map(|(&id, v)| (grass.get(id).to_literal(), v.as_ref().map_or("none".into(), |v| fmt_vec(field, v))))
                .collect::<Vec<_>>(),
        );
        let s = sign.symbol();
        let n = carrier.len();
        let mut distinct: Vec<&Vec<F::Elem>> = image.iter().flatten().collect();
        distinct.sort();
        distinct.dedup();
        let expected = field.order().checked_pow(p.dim(sign) as u32);
        checks.push(CheckReport::single(format!("phi{s} bijective onto A{s}"), distinct.len() == n && expected == Some(n), || Failure {
            tuple: vec![],
            expected: format!("{expected:?} distinct images"),
            actual: format!("{} of {n}", distinct.len()),
        }));
        maps.push(image);
    }
    let (mp, mm) = (&maps[0], &maps[1]);
    for sign in [Sign::Plus, Sign::Minus] {
        let (this, other) = (ext.carrier(sign), ext.carrier(sign.flip()));
        let (phi, psi) = match sign {
            Sign::Plus => (mp, mm),
            Sign::Minus => (mm, mp),
        };
        let s = sign.symbol();
        let lit = |c: &crate::pairs::FiniteModule, i: usize| grass.get(c.ids()[i]).to_literal();
        let cmp = |tuple: Vec<String>, l: &Option<Vec<F::Elem>>, r: Option<Vec<F::Elem>>| {
            Some(if l.is_some() && *l == r {
                Ok(())
            } else {
                let show = |v: &Option<Vec<F::Elem>>| v.as_ref().map_or("none".into(), |v| fmt_vec(field, v));
                Err(Failure { tuple, expected: show(&r), actual: show(l) })
            })
        };
        let (n, m, q) = (this.len(), other.len(), field.order());
        checks.push(scan_tuples(&format!("phi{s} additive"), &[n, n], budget, seed, |t| {
            let r = phi[t[0]].as_ref().zip(phi[t[1]].as_ref()).map(|(a, b)| add_vec(field, a, b));
            cmp(vec![lit(this, t[0]), lit(this, t[1])], &phi[this.add(t[0], t[1])], r)
        }));
        checks.push(scan_tuples(&format!("phi{s} homogeneous"), &[q, n], budget, seed, |t| {
            let r = phi[t[1]].as_ref().map(|a| scale_vec(field, field.element(t[0]), a));
            cmp(vec![field.format(field.element(t[0])), lit(this, t[1])], &phi[this.scale(t[0], t[1])], r)
        }));
        checks.push(scan_tuples(&format!("phi{s} intertwines <..>{s}"), &[n, m, n], budget, seed, |t| {
            let r = match (&phi[t[0]], &psi[t[1]], &phi[t[2]]) {
                (Some(x), Some(y), Some(z)) => Some(p.triple(sign, x, y, z)),
                _ => None,
            };
            cmp(vec![lit(this, t[0]), lit(other, t[1]), lit(this, t[2])], &phi[ext.triple(sign, t[0], t[1], t[2])], r)
        }));
    }
    let minus_map = listings.pop().unwrap_or_default();
    let plus_map = listings.pop().unwrap_or_default();
    Ok(RoundTrip { holds: checks.iter().all(CheckReport::passed), ideals: grass.len(), plus_map, minus_map, checks })
}
