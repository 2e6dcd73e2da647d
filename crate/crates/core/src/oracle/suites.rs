//! Named verification suites over an enumerated Grassmannian, and the
//! cross-route consistency check.
//!
//! Each suite id is stable. Identities quantified over several carriers
//! (one U_ab per pair, say) split the budget evenly between the carriers
//! and merge the per-carrier reports by identity.

use std::cell::OnceCell;
use std::time::Instant;

use super::report::{scan_tuples, CheckReport, Failure, Mode, SuiteReport, MAX_RECORDED_FAILURES};
use super::rng::SplitMix64;
use super::table::{GammaOracle, PiTable, Quintary, Ternary};
use super::Grassmannian;
use crate::error::{Error, Result};
use crate::exactla::{Field, FiniteField, Matrix};
use crate::gamma::{
    delta_operator, gamma_operator_route, gamma_operator_values, homogeneous, l_operator, m_operator, r_operator, AffineChart,
    ConditionalValue, DiagonalCase, GammaDomainFlags, ProjOperator, ScanSpace,
};
use crate::modspace::{join, meet, ModuleSpace, Subspace};
use crate::pairs::{extract_algebra, extract_pair, pair_roundtrip_check, AssociativePair, Sign, StandardImbedding, UnitalAlgebra};
use crate::relations::{is_structural_pair, left_mult_relation, LinearRelation};
use crate::torsor::{
    action_check_with, affine_space_check_with, compare, group_view, lit, operator_inverse_check, pi_tables,
    structural_family_check, torsor_identities_with, transversal_table, verify_geometry_axioms, PartialMap, TernaryTable,
};

/// Every suite id, in report order.
pub const SUITE_IDS: [&str; 20] = [
    "prop11", "thm12", "thm13", "prop14", "thm15", "thm23", "thm24", "cor25", "thm26", "thm27", "cor28", "cor29", "thm210",
    "axioms31", "prop31", "lemma32", "thm33", "thm34", "appendixA", "appendixB",
];

/// Random relations drawn by `thm26`.
pub const RANDOM_RELATIONS: usize = 20;

type Outcome = (Vec<CheckReport>, Vec<String>);
type Check = std::result::Result<(), Failure>;

/// (topic, statement) for a suite id.
fn metadata(id: &str) -> Option<(&'static str, &'static str)> {
    Some(match id {
        "prop11" => (
            "operator calculus of L, M, R",
            "M_xabz = M_axzb = M_bzxa = M_zbax; R_aubz L_xavb = M_xabz M_uabv = L_xavb R_aubz; L_xaxb = 1 = R_axbx; \
             L_xayb(z) = M_xabz(y) = R_aybz(x); L_yaxb, M_zabx, R_azby invert L_xayb, M_xabz, R_aybz on C_ab",
        ),
        "thm12" => (
            "common complements form torsors",
            "C_ab with (xyz) = Γ(x,a,y,b,z) is a torsor U_ab; U_ba is its opposite; U_a is an affine space with \
             x +_y z = Γ(x,a,y,a,z) and scalars Π_s",
        ),
        "thm13" => (
            "left and right actions of U_ab",
            "for y ∈ U_ab, (x,z) ↦ Γ(x,a,y,b,z) is a left and a right action by automorphisms, and they commute",
        ),
        "prop14" => (
            "homogeneous formulas",
            "Γ([x],[a],[y],[b],[z]) = [x(ax)⁻¹ay − y + z(bz)⁻¹by] and the left and right variants",
        ),
        "thm15" => (
            "trilinear pair at a transversal pair",
            "Γ(U_a,a,U_b,b,U_a) ⊂ U_a, Γ(U_b,a,U_a,b,U_b) ⊂ U_b; for a ⊤ b both maps are trilinear and para-associative",
        ),
        "thm23" => (
            "extended Γ: symmetry and semitorsor law",
            "Γ(x,a,y,b,z) = Γ(z,b,y,a,x) = Γ(a,x,y,z,b); (xyz) = Γ(x,a,y,b,z) is a semitorsor on all of X; \
             Γ extends the operator route",
        ),
        "thm24" => (
            "diagonal values of Γ",
            "closed lattice expressions of Γ on the diagonals x = y, a = z, b = z and their subdiagonals",
        ),
        "cor25" => (
            "values forced by transversality",
            "b∨x = W, a∧x = 0 ⇒ Γ(x,a,x,b,z) = z; a∨y = W, b∨x = W ⇒ Γ(x,a,y,b,a) = a; x∧a = 0, y∧b = 0 ⇒ Γ(x,a,y,b,b) = b",
        ),
        "thm26" => (
            "linear relations are structural",
            "for a linear relation r ⊂ W ⊕ W, (r_*, r^*) is a structural pair",
        ),
        "thm27" => (
            "multiplication operators are structural",
            "(L_xayb, L_yaxb), (M_xabz, M_zabx), (R_aybz, R_azby) are structural pairs; l_xayb pushes forward to L_xayb",
        ),
        "cor28" => ("self-distributivity", "Γ distributes over itself through the (M, M) and (L, L) structural pairs"),
        "cor29" => (
            "tri-affinity",
            "(xyz)± = Γ(x,a,y,b,z) on U_a×U_b×U_a and U_b×U_a×U_b is affine in each variable and para-associative",
        ),
        "thm210" => (
            "extended dilations Π_r",
            "Π_r = δ^r_xa on x ⊤ a; Π_r(x,a,z) = Π_{1−r}(z,a,x); Π_r Π_s = Π_rs; Π_r(x,a,x) = x; Π_0(x,a,z) = x ∧ (z ∨ a) = Γ(x,a,a,x,z); \
             λ and μ pairs are structural when r(1−r) is invertible",
        ),
        "axioms31" => ("associative geometry axioms", "axioms (1)–(6) of an associative geometry"),
        "prop31" => (
            "torsors and actions from the axioms",
            "C_ab is stable and a torsor U_ab; (U_ab, y) acts from both sides and the actions commute",
        ),
        "lemma32" => (
            "the coordinate identity",
            "Γ(x,b,Γ(x,a,y,b,z),b,z) = Γ(z,b,a,y,x) for z ∈ U_b, x ∈ U_ab; (x,a,z) ↦ Γ(x,a,y,b,z) is affine on U_b×U_y×U_b",
        ),
        "thm33" => (
            "pairs and algebras from a geometry",
            "at a transversal pair the geometry gives an associative pair; at a transversal triple it gives a unital algebra",
        ),
        "thm34" => (
            "geometries from pairs",
            "the standard imbedding of an algebra or operator pair realizes it as the pair of a Grassmannian geometry",
        ),
        "appendixA" => ("torsor identities", "Chasles relations, middle multiplications, symmetric diagonal"),
        "appendixB" => (
            "associative pairs",
            "para-associativity, Jordan polarization, homotopes, units of homotopes and quasi-inverses, Peirce decomposition",
        ),
        _ => return None,
    })
}

/// "GF(2)^3", with the number of module generators when there are any.
pub fn space_label<F: Field>(space: &ModuleSpace<F>) -> String {
    let base = format!("{}^{}", space.field().spec(), space.dim());
    match space.generators().len() {
        0 => base,
        k => format!("{base} ({k} generators)"),
    }
}

/// Runs one suite. Builds the Γ table for `grass` first; use
/// [`SuiteContext`] to share it across suites.
pub fn run_suite<F: FiniteField>(suite_id: &str, grass: &Grassmannian<F>, budget: u64, seed: u64) -> Result<SuiteReport> {
    if metadata(suite_id).is_none() {
        return Err(Error::UnknownSuite(suite_id.to_string()));
    }
    SuiteContext::new(grass).run(suite_id, budget, seed)
}

/// Extended, vector-scan, operator and affine-chart evaluations of Γ agree
/// wherever each is defined.
pub fn cross_route_check<F: FiniteField>(grass: &Grassmannian<F>, budget: u64, seed: u64) -> Result<SuiteReport> {
    SuiteContext::new(grass).cross_routes(budget, seed)
}

/// Splits a budget between `parts` carriers.
fn share(budget: u64, parts: usize) -> u64 {
    (budget / parts.max(1) as u64).max(1)
}

/// Drops the parameter suffix that the torsor checks append to names.
fn strip_params(s: &str) -> &str {
    s.rfind(" (a").map_or(s, |i| &s[..i])
}

/// Merges reports with the same name, in order of first appearance.
fn merged(reports: impl IntoIterator<Item = CheckReport>) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = Vec::new();
    for r in reports {
        let name = strip_params(&r.axiom).to_string();
        match out.iter_mut().find(|c| c.axiom == name) {
            Some(c) => {
                c.tuples_checked += r.tuples_checked;
                c.failure_count += r.failure_count;
                let room = MAX_RECORDED_FAILURES.saturating_sub(c.failures.len());
                c.failures.extend(r.failures.into_iter().take(room));
                if r.mode == Mode::Sampled {
                    c.mode = Mode::Sampled;
                }
            }
            None => out.push(CheckReport { axiom: name, ..r }),
        }
    }
    out
}

fn failed_step(name: &str, err: &Error) -> CheckReport {
    CheckReport::single(name, false, || Failure { tuple: vec![], expected: "success".into(), actual: err.to_string() })
}

/// Shared tables for running many suites on one Grassmannian.
pub struct SuiteContext<'g, F: FiniteField> {
    grass: &'g Grassmannian<F>,
    gamma: GammaOracle<'g, F>,
    tr: Vec<Vec<bool>>,
    common: Vec<Vec<Vec<usize>>>,
    pis: OnceCell<Vec<PiTable>>,
    lattice: OnceCell<(Vec<Vec<usize>>, Vec<Vec<usize>>)>,
}

impl<'g, F: FiniteField> SuiteContext<'g, F> {
    pub fn new(grass: &'g Grassmannian<F>) -> Self {
        let tr = transversal_table(grass);
        let n = grass.len();
        let common = (0..n)
            .map(|a| (0..n).map(|b| (0..n).filter(|&x| tr[x][a] && tr[x][b]).collect()).collect())
            .collect();
        SuiteContext { grass, gamma: GammaOracle::new(grass), tr, common, pis: OnceCell::new(), lattice: OnceCell::new() }
    }

    pub fn grassmannian(&self) -> &Grassmannian<F> {
        self.grass
    }

    pub fn gamma(&self) -> &GammaOracle<'g, F> {
        &self.gamma
    }

    /// One Π table per scalar, indexed by `field.index_of`.
    pub fn pis(&self) -> &[PiTable] {
        self.pis.get_or_init(|| pi_tables(self.grass))
    }

    pub fn run(&self, id: &str, budget: u64, seed: u64) -> Result<SuiteReport> {
        let (topic, statement) = metadata(id).ok_or_else(|| Error::UnknownSuite(id.to_string()))?;
        if budget == 0 {
            return Err(Error::HypothesisNotMet("budget ≥ 1"));
        }
        let start = Instant::now();
        let (checks, notes) = match id {
            "prop11" => self.prop11(budget, seed)?,
            "thm12" => self.thm12(budget, seed),
            "thm13" => self.thm13(budget, seed),
            "prop14" => self.prop14(budget, seed),
            "thm15" => self.thm15(budget, seed),
            "thm23" => self.thm23(budget, seed),
            "thm24" => self.thm24(budget, seed),
            "cor25" => self.cor25(budget, seed),
            "thm26" => self.thm26(budget, seed)?,
            "thm27" => self.thm27(budget, seed)?,
            "cor28" => self.cor28(budget, seed),
            "cor29" => self.cor29(budget, seed),
            "thm210" => self.thm210(budget, seed)?,
            "axioms31" => (verify_geometry_axioms(self.grass, &self.gamma, self.pis(), budget, seed), vec![]),
            "prop31" => self.prop31(budget, seed),
            "lemma32" => self.lemma32(budget, seed),
            "thm33" => self.thm33(budget, seed),
            "thm34" => self.thm34(budget, seed),
            "appendixA" => self.appendix_a(budget, seed),
            "appendixB" => self.appendix_b(budget, seed),
            _ => unreachable!("metadata covers every id"),
        };
        Ok(self.report(id, budget, seed, topic, statement, checks, notes, start))
    }

    /// Runs every suite in [`SUITE_IDS`] order.
    pub fn run_all(&self, budget: u64, seed: u64) -> Result<Vec<SuiteReport>> {
        SUITE_IDS.iter().map(|id| self.run(id, budget, seed)).collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn report(
        &self,
        id: &str,
        budget: u64,
        seed: u64,
        topic: &str,
        statement: &str,
        checks: Vec<CheckReport>,
        notes: Vec<String>,
        start: Instant,
    ) -> SuiteReport {
        let ms = start.elapsed().as_millis() as u64;
        SuiteReport::from_checks(id, space_label(self.grass.space()), seed, budget, topic, statement, checks, notes, ms)
    }

    fn n(&self) -> usize {
        self.grass.len()
    }

    fn e(&self) -> &[Subspace<F>] {
        self.grass.elements()
    }

    fn field(&self) -> &F {
        self.grass.space().field()
    }

    #[inline]
    fn g(&self, x: usize, a: usize, y: usize, b: usize, z: usize) -> usize {
        self.gamma.gamma(x, a, y, b, z)
    }

    fn cmp(&self, args: &[usize], expected: usize, actual: usize) -> Check {
        compare(self.grass, args, expected, actual)
    }

    /// C_ab as indices.
    fn cab(&self, a: usize, b: usize) -> &[usize] {
        &self.common[a][b]
    }

    fn lattice(&self) -> &(Vec<Vec<usize>>, Vec<Vec<usize>>) {
        self.lattice.get_or_init(|| {
            let e = self.e();
            let table = |op: fn(&Subspace<F>, &Subspace<F>) -> Subspace<F>| -> Vec<Vec<usize>> {
                e.iter().map(|x| e.iter().map(|y| self.grass.expect_index(&op(x, y))).collect()).collect()
            };
            (table(meet), table(join))
        })
    }

    fn fail(&self, args: &[usize], expected: &str, actual: impl Into<String>) -> Failure {
        Failure { tuple: lit(self.grass, args), expected: expected.into(), actual: actual.into() }
    }

    fn op_eq(&self, args: &[usize], lhs: &ProjOperator<F>, rhs: &ProjOperator<F>, what: &str) -> Check {
        if lhs == rhs {
            Ok(())
        } else {
            Err(self.fail(args, what, "operators differ"))
        }
    }

    fn subspace_eq(&self, args: &[usize], expected: usize, actual: &Subspace<F>) -> Check {
        match self.grass.index_of(actual) {
            Some(i) => self.cmp(args, expected, i),
            None => Err(self.fail(args, &self.grass.get(expected).to_literal(), actual.to_literal())),
        }
    }

    fn in_set(&self, args: &[usize], v: usize, set: &[usize], name: &str) -> Check {
        if set.contains(&v) {
            Ok(())
        } else {
            Err(self.fail(args, &format!("an element of {name}"), self.grass.get(v).to_literal()))
        }
    }

    /// (a, x) with x ⊤ a.
    fn transversal_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n).flat_map(|a| (0..n).filter(move |&x| self.tr[x][a]).map(move |x| (a, x))).collect()
    }

    /// (a, b) with C_ab nonempty.
    fn complemented_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| !self.cab(a, b).is_empty()).collect()
    }

    /// (a, b, u, v) with u, v ∈ C_ab.
    fn common_quads(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for (a, b) in self.complemented_pairs() {
            for &u in self.cab(a, b) {
                for &v in self.cab(a, b) {
                    out.push([a, b, u, v]);
                }
            }
        }
        out
    }

    fn flags(&self, x: usize, a: usize, y: usize, b: usize, z: usize) -> GammaDomainFlags {
        let (xa, zb) = (self.tr[x][a], self.tr[z][b]);
        GammaDomainFlags {
            in_dl: xa && self.tr[y][b],
            in_dr: self.tr[y][a] && zb,
            in_dm: xa && zb && !self.cab(a, b).is_empty(),
        }
    }

    fn prop11(&self, budget: u64, seed: u64) -> Result<Outcome> {
        let e = self.e();
        let n = self.n();
        let pairs = self.transversal_pairs();
        let triples: Vec<(usize, usize, usize)> = pairs
            .iter()
            .flat_map(|&(a, x)| (0..n).filter(move |&u| self.tr[u][a]).map(move |u| (a, x, u)))
            .collect();
        let mut diagonal = Vec::new();
        for (a, b) in self.complemented_pairs() {
            for &x in self.cab(a, b) {
                diagonal.push((a, b, x));
            }
        }
        let quads = self.common_quads();
        let err = |args: &[usize], e: Error| self.fail(args, "an operator", e.to_string());
        let (p, t3) = (pairs.len(), triples.len());
        let mut checks = Vec::new();

        checks.push(scan_tuples("M_xabz = M_axzb = M_bzxa = M_zbax", &[p, p], budget, seed, |t| {
            let ((a, x), (b, z)) = (pairs[t[0]], pairs[t[1]]);
            let args = [x, a, b, z];
            Some((|| {
                let m = m_operator(&e[x], &e[a], &e[b], &e[z]).map_err(|er| err(&args, er))?;
                for other in [
                    m_operator(&e[a], &e[x], &e[z], &e[b]),
                    m_operator(&e[b], &e[z], &e[x], &e[a]),
                    m_operator(&e[z], &e[b], &e[a], &e[x]),
                ] {
                    self.op_eq(&args, &m, &other.map_err(|er| err(&args, er))?, "Klein-symmetric M")?;
                }
                Ok(())
            })())
        }));
        checks.push(scan_tuples("R_aubz L_xavb = M_xabz M_uabv = L_xavb R_aubz", &[t3, t3], budget, seed, |t| {
            let ((a, x, u), (b, v, z)) = (triples[t[0]], triples[t[1]]);
            let args = [x, a, u, b, v, z];
            Some((|| {
                let r = r_operator(&e[a], &e[u], &e[b], &e[z]).map_err(|er| err(&args, er))?;
                let l = l_operator(&e[x], &e[a], &e[v], &e[b]).map_err(|er| err(&args, er))?;
                let m1 = m_operator(&e[x], &e[a], &e[b], &e[z]).map_err(|er| err(&args, er))?;
                let m2 = m_operator(&e[u], &e[a], &e[b], &e[v]).map_err(|er| err(&args, er))?;
                let rl = r.compose(&l);
                self.op_eq(&args, &rl, &m1.compose(&m2), "R L = M M")?;
                self.op_eq(&args, &rl, &l.compose(&r), "R L = L R")
            })())
        }));
        checks.push(scan_tuples("L_xaxb = 1 = R_axbx on C_ab", &[diagonal.len()], budget, seed, |t| {
            let (a, b, x) = diagonal[t[0]];
            let args = [x, a, b];
            Some((|| {
                let l = l_operator(&e[x], &e[a], &e[x], &e[b]).map_err(|er| err(&args, er))?;
                let r = r_operator(&e[a], &e[x], &e[b], &e[x]).map_err(|er| err(&args, er))?;
                if l.is_identity() && r.is_identity() {
                    Ok(())
                } else {
                    Err(self.fail(&args, "identity", "not the identity"))
                }
            })())
        }));
        checks.push(scan_tuples("M_uabz(u) = z = R_aubz(u)", &[diagonal.len(), n], budget, seed, |t| {
            let ((a, b, u), z) = (diagonal[t[0]], t[1]);
            if !self.tr[z][b] {
                return None;
            }
            let args = [u, a, b, z];
            Some((|| {
                let m = m_operator(&e[u], &e[a], &e[b], &e[z]).map_err(|er| err(&args, er))?;
                let r = r_operator(&e[a], &e[u], &e[b], &e[z]).map_err(|er| err(&args, er))?;
                self.subspace_eq(&args, z, &m.apply(&e[u]))?;
                self.subspace_eq(&args, z, &r.apply(&e[u]))
            })())
        }));

        // compatibility, asserted when C_ab ≠ ∅ and observed otherwise
        let mut notes = Vec::new();
        let compat = |name: &str, hyp: &dyn Fn(usize, usize, usize, usize, usize) -> bool, form: u8| {
            let mut observed = CheckReport::new(name, Mode::Exhaustive);
            let mut asserted = scan_tuples(name, &[n; 5], budget, seed, |t| {
                let (x, a, y, b, z) = (t[0], t[1], t[2], t[3], t[4]);
                if !hyp(x, a, y, b, z) {
                    return None;
                }
                let outcome = (|| {
                    let mv = m_operator(&e[x], &e[a], &e[b], &e[z]).map_err(|er| err(t, er))?.apply(&e[y]);
                    let other = if form == 0 {
                        l_operator(&e[x], &e[a], &e[y], &e[b]).map_err(|er| err(t, er))?.apply(&e[z])
                    } else {
                        r_operator(&e[a], &e[y], &e[b], &e[z]).map_err(|er| err(t, er))?.apply(&e[x])
                    };
                    if mv == other {
                        Ok(())
                    } else {
                        Err(self.fail(t, &other.to_literal(), mv.to_literal()))
                    }
                })();
                if self.cab(a, b).is_empty() {
                    observed.record(outcome);
                    None
                } else {
                    Some(outcome)
                }
            });
            observed.mode = asserted.mode;
            asserted.axiom = name.to_string();
            (asserted, observed)
        };
        for (name, form) in [("L_xayb(z) = M_xabz(y)", 0u8), ("M_xabz(y) = R_aybz(x)", 1)] {
            let hyp: Box<dyn Fn(usize, usize, usize, usize, usize) -> bool> = if form == 0 {
                Box::new(|x, a, y, b, z| self.tr[x][a] && self.tr[y][b] && self.tr[z][b])
            } else {
                Box::new(|x, a, y, b, z| self.tr[x][a] && self.tr[z][b] && self.tr[y][a])
            };
            let (asserted, observed) = compat(name, &*hyp, form);
            checks.push(asserted);
            notes.push(format!(
                "{name} with C_ab empty (not asserted): {} tuples, {} mismatches",
                observed.tuples_checked, observed.failure_count
            ));
        }

        checks.push(scan_tuples("L_vaub L_uavb = M_vabu M_uabv = R_avbu R_aubv = 1", &[quads.len()], budget, seed, |t| {
            let [a, b, u, v] = quads[t[0]];
            let args = [a, b, u, v];
            Some((|| {
                let pairs = [
                    (l_operator(&e[v], &e[a], &e[u], &e[b]), l_operator(&e[u], &e[a], &e[v], &e[b])),
                    (m_operator(&e[v], &e[a], &e[b], &e[u]), m_operator(&e[u], &e[a], &e[b], &e[v])),
                    (r_operator(&e[a], &e[v], &e[b], &e[u]), r_operator(&e[a], &e[u], &e[b], &e[v])),
                ];
                for (inv, op) in pairs {
                    let (inv, op) = (inv.map_err(|er| err(&args, er))?, op.map_err(|er| err(&args, er))?);
                    if !(op.is_invertible() && inv.compose(&op).is_identity()) {
                        return Err(self.fail(&args, "inverse operators", "product is not the identity"));
                    }
                }
                Ok(())
            })())
        }));
        checks.extend(operator_inverse_check(self.grass, &self.gamma, budget, seed));
        Ok((checks, notes))
    }

    /// Closure and (G1), (G2) on every nonempty U_ab, plus reversal.
    fn torsor_scans(&self, budget: u64, seed: u64) -> Vec<CheckReport> {
        let pairs = self.complemented_pairs();
        let per = share(budget, pairs.len());
        let mut raw = Vec::new();
        for &(a, b) in &pairs {
            let c = self.cab(a, b);
            let m = c.len();
            let p = |x, y, z| self.g(x, a, y, b, z);
            raw.push(scan_tuples("C_ab is stable under (xyz)", &[m; 3], per, seed, |t| {
                let (x, y, z) = (c[t[0]], c[t[1]], c[t[2]]);
                Some(self.in_set(&[x, a, y, b, z], p(x, y, z), c, "C_ab"))
            }));
            raw.push(scan_tuples("(G1) (xy(zuv)) = ((xyz)uv) on U_ab", &[m; 5], per, seed, |t| {
                let (x, y, z, u, v) = (c[t[0]], c[t[1]], c[t[2]], c[t[3]], c[t[4]]);
                Some(self.cmp(&[x, y, z, u, v, a, b], p(p(x, y, z), u, v), p(x, y, p(z, u, v))))
            }));
            raw.push(scan_tuples("(G2) (xxy) = y = (yxx) on U_ab", &[m; 2], per, seed, |t| {
                let (x, y) = (c[t[0]], c[t[1]]);
                let args = [x, y, a, b];
                Some(self.cmp(&args, y, p(x, x, y)).and_then(|_| self.cmp(&args, y, p(y, x, x))))
            }));
        }
        merged(raw)
    }

    /// [`action_check_with`] for every (a, y, b) with y ∈ C_ab.
    fn action_scans(&self, budget: u64, seed: u64) -> Vec<CheckReport> {
        let mut triples = Vec::new();
        for (a, b) in self.complemented_pairs() {
            for &y in self.cab(a, b) {
                triples.push((a, y, b));
            }
        }
        let per = share(budget, triples.len());
        merged(triples.iter().flat_map(|&(a, y, b)| action_check_with(a, y, b, self.grass, &self.gamma, &self.tr, per, seed)))
    }

    fn thm12(&self, budget: u64, seed: u64) -> Outcome {
        let n = self.n();
        let mut raw = self.torsor_scans(budget, seed);
        let pairs = self.complemented_pairs();
        let per = share(budget, pairs.len());
        for &(a, b) in &pairs {
            let c = self.cab(a, b);
            raw.push(scan_tuples("U_ba is the opposite of U_ab", &[c.len(); 3], per, seed, |t| {
                let (x, y, z) = (c[t[0]], c[t[1]], c[t[2]]);
                Some(self.cmp(&[x, a, y, b, z], self.g(z, b, y, a, x), self.g(x, a, y, b, z)))
            }));
        }
        let per_a = share(budget, n);
        for a in 0..n {
            let c = self.cab(a, a);
            raw.push(scan_tuples("U_a is commutative", &[c.len(); 3], per_a, seed, |t| {
                let (x, y, z) = (c[t[0]], c[t[1]], c[t[2]]);
                Some(self.cmp(&[x, a, y, z], self.g(z, a, y, a, x), self.g(x, a, y, a, z)))
            }));
            raw.extend(affine_space_check_with(a, self.grass, &self.gamma, self.pis(), &self.tr, per_a, seed));
        }
        let notes = vec![format!("{} of {} pairs (a,b) have C_ab nonempty", pairs.len(), n * n)];
        (merged(raw), notes)
    }

    fn thm13(&self, budget: u64, seed: u64) -> Outcome {
        let n = self.n();
        let mut checks = self.action_scans(budget, seed);
        let quads = self.common_quads();
        let q = self.field().order();
        let pis = self.pis();
        for family in PartialMap::ALL {
            // parameters in the order PartialMap expects
            let params = |[a, b, u, v]: [usize; 4]| match family {
                PartialMap::Left => [u, a, v, b],
                PartialMap::Middle => [u, a, b, v],
                PartialMap::Right => [a, u, b, v],
            };
            let label = match family {
                PartialMap::Left => "L_xayb",
                PartialMap::Middle => "M_xabz",
                PartialMap::Right => "R_aybz",
            };
            checks.push(scan_tuples(&format!("{label} is a Γ-automorphism for x, y, z ∈ U_ab"), &[quads.len(), n, n, n, n, n], budget, seed, |t| {
                let p = params(quads[t[0]]);
                let f = |w| family.apply(&self.gamma, &p, w).0;
                let (x, a, y, b, z) = (t[1], t[2], t[3], t[4], t[5]);
                let args = [p[0], p[1], p[2], p[3], x, a, y, b, z];
                Some(self.cmp(&args, self.g(f(x), f(a), f(y), f(b), f(z)), f(self.g(x, a, y, b, z))))
            }));
            checks.push(scan_tuples(&format!("{label} is a Π-automorphism for x, y, z ∈ U_ab"), &[quads.len(), q, n, n, n], budget, seed, |t| {
                let p = params(quads[t[0]]);
                let f = |w| family.apply(&self.gamma, &p, w).0;
                let (r, x, a, z) = (t[1], t[2], t[3], t[4]);
                let args = [p[0], p[1], p[2], p[3], x, a, z];
                Some(self.cmp(&args, pis[r].pi(f(x), f(a), f(z)), f(pis[r].pi(x, a, z))))
            }));
        }
        (checks, vec![])
    }

    fn prop14(&self, budget: u64, seed: u64) -> Outcome {
        let e = self.e();
        let dim = self.grass.space().dim();
        let mut raw = Vec::new();
        let splits: Vec<usize> = (1..dim).collect();
        let per = share(budget, splits.len());
        // x as an injection o⁺ → W (basis as columns), a as a surjection W → o⁺ with kernel a
        let inj: Vec<Matrix<F>> = e.iter().map(|s| s.basis().transpose()).collect();
        let sur: Vec<Matrix<F>> = e.iter().map(|s| s.annihilator().clone()).collect();
        type Form<F> = fn(&Matrix<F>, &Matrix<F>, &Matrix<F>, &Matrix<F>, &Matrix<F>) -> Result<Matrix<F>>;
        let forms: [(&str, Form<F>, fn(&[Vec<bool>], [usize; 5]) -> bool); 3] = [
            ("middle form: x(ax)⁻¹ay − y + z(bz)⁻¹by", homogeneous::middle, |tr, [x, a, _, b, z]| tr[x][a] && tr[z][b]),
            ("left form: x(ax)⁻¹ay(by)⁻¹bz − y(by)⁻¹bz + z", homogeneous::left, |tr, [x, a, y, b, _]| tr[x][a] && tr[y][b]),
            ("right form: x − y(ay)⁻¹ax + z(bz)⁻¹b y(ay)⁻¹ax", homogeneous::right, |tr, [_, a, y, b, z]| tr[y][a] && tr[z][b]),
        ];
        for &p in &splits {
            let plus: Vec<usize> = (0..e.len()).filter(|&i| e[i].dim() == p).collect();
            let minus: Vec<usize> = (0..e.len()).filter(|&i| e[i].dim() == dim - p).collect();
            let dims = [plus.len(), minus.len(), plus.len(), minus.len(), plus.len()];
            for (name, form, hyp) in forms {
                raw.push(scan_tuples(name, &dims, per, seed, |t| {
                    let tuple = [plus[t[0]], minus[t[1]], plus[t[2]], minus[t[3]], plus[t[4]]];
                    if !hyp(&self.tr, tuple) {
                        return None;
                    }
                    let [x, a, y, b, z] = tuple;
                    let expected = self.g(x, a, y, b, z);
                    Some(match form(&inj[x], &sur[a], &inj[y], &sur[b], &inj[z]) {
                        Ok(m) => self.subspace_eq(&tuple, expected, &Subspace::span_of(&m.transpose())),
                        Err(er) => Err(self.fail(&tuple, "an invertible denominator", er.to_string())),
                    })
                }));
            }
        }
        (merged(raw), vec![])
    }

    fn thm15(&self, budget: u64, seed: u64) -> Outcome {
        let n = self.n();
        let e = self.e();
        let mut raw = Vec::new();
        let per = share(budget, n * n);
        for a in 0..n {
            for b in 0..n {
                let (ua, ub) = (self.cab(a, a), self.cab(b, b));
                raw.push(scan_tuples("Γ(U_a,a,U_b,b,U_a) ⊂ U_a", &[ua.len(), ub.len(), ua.len()], per, seed, |t| {
                    let (x, y, z) = (ua[t[0]], ub[t[1]], ua[t[2]]);
                    Some(self.in_set(&[x, a, y, b, z], self.g(x, a, y, b, z), ua, "U_a"))
                }));
                raw.push(scan_tuples("Γ(U_b,a,U_a,b,U_b) ⊂ U_b", &[ub.len(), ua.len(), ub.len()], per, seed, |t| {
                    let (x, y, z) = (ub[t[0]], ua[t[1]], ub[t[2]]);
                    Some(self.in_set(&[x, a, y, b, z], self.g(x, a, y, b, z), ub, "U_b"))
                }));
            }
        }
        let pairs = self.transversal_pairs();
        let per = share(budget, pairs.len());
        for &(a, b) in &pairs {
            // (xyz)⁺ lives on U_a, so a plays o⁻ and b plays o⁺
            match extract_pair(self.grass, &self.gamma, &e[b], &e[a], per, seed) {
                Ok(ext) => raw.extend(ext.checks().iter().cloned()),
                Err(er) => raw.push(failed_step("pair extraction", &er)),
            }
        }
        (merged(raw), vec![format!("{} transversal pairs", pairs.len())])
    }

    fn operator_route_scan(&self, budget: u64, seed: u64) -> CheckReport {
        let e = self.e();
        scan_tuples("operator route agrees with Γ on D(Γ)", &[self.n(); 5], budget, seed, |t| {
            let (x, a, y, b, z) = (t[0], t[1], t[2], t[3], t[4]);
            let flags = self.flags(x, a, y, b, z);
            if !flags.any() {
                return None;
            }
            let expected = self.g(x, a, y, b, z);
            let values = gamma_operator_values(&e[x], &e[a], &e[y], &e[b], &e[z], flags);
            Some(values.iter().try_for_each(|v| self.subspace_eq(t, expected, v)))
        })
    }

    fn thm23(&self, budget: u64, seed: u64) -> Outcome {
        let n = self.n();
        let checks = vec![
            scan_tuples("Γ(x,a,y,b,z) = Γ(z,b,y,a,x)", &[n; 5], budget, seed, |t| {
                let (x, a, y, b, z) = (t[0], t[1], t[2], t[3], t[4]);
                Some(self.cmp(t, self.g(x, a, y, b, z), self.g(z, b, y, a, x)))
            }),
            scan_tuples("Γ(x,a,y,b,z) = Γ(a,x,y,z,b)", &[n; 5], budget, seed, |t| {
                let (x, a, y, b, z) = (t[0], t[1], t[2], t[3], t[4]);
                Some(self.cmp(t, self.g(x, a, y, b, z), self.g(a, x, y, z, b)))
            }),
            scan_tuples("semitorsor law on X_ab", &[n; 7], budget, seed, |t| {
                let (x, u, y, v, z, a, b) = (t[0], t[1], t[2], t[3], t[4], t[5], t[6]);
                let p = |x, y, z| self.g(x, a, y, b, z);
                let first = p(x, u, p(y, v, z));
                Some(self.cmp(t, first, p(x, p(v, y, u), z)).and_then(|_| self.cmp(t, first, p(p(x, u, y), v, z))))
            }),
            self.operator_route_scan(budget, seed),
        ];
        (checks, vec![])
    }

    fn thm24(&self, budget: u64, seed: u64) -> Outcome {
        let n = self.n();
        let e = self.e();
        let (mt, jt) = self.lattice();
        let mut checks = Vec::new();
        for case in DiagonalCase::ALL {
            checks.push(scan_tuples(&format!("diagonal {case:?}"), &[n; 5], budget, seed, |t| {
                let s = [&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]], &e[t[4]]];
                if !case.matches(s) {
                    return None;
                }
                Some(self.subspace_eq(t, self.g(t[0], t[1], t[2], t[3], t[4]), &case.evaluate(s)))
            }));
        }
        checks.push(scan_tuples("(z∨(x∧a))∧(b∨x) = (z∧(x∨b))∨(a∧x)", &[n; 4], budget, seed, |t| {
            let (x, a, b, z) = (t[0], t[1], t[2], t[3]);
            Some(self.cmp(t, mt[jt[z][mt[x][a]]][jt[b][x]], jt[mt[z][jt[x][b]]][mt[a][x]]))
        }));
        checks.push(scan_tuples("(z∧x)∨(a∧x) = ((z∧x)∨a)∧x", &[n; 3], budget, seed, |t| {
            let (x, a, z) = (t[0], t[1], t[2]);
            Some(self.cmp(t, jt[mt[z][x]][mt[a][x]], mt[jt[mt[z][x]][a]][x]))
        }));
        (checks, vec![])
    }

    fn cor25(&self, budget: u64, seed: u64) -> Outcome {
        let n = self.n();
        let e = self.e();
        let checks = ConditionalValue::ALL
            .iter()
            .map(|&case| {
                scan_tuples(&format!("forced value {case:?}"), &[n; 5], budget, seed, |t| {
                    let s = [&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]], &e[t[4]]];
                    let v = case.predict(s)?;
                    Some(self.subspace_eq(t, self.g(t[0], t[1], t[2], t[3], t[4]), &v))
                })
            })
            .collect();
        (checks, vec![])
    }

    fn thm26(&self, budget: u64, seed: u64) -> Result<Outcome> {
        let space = self.grass.space();
        let mut rng = SplitMix64::for_stream(seed, "thm26 relations");
        let mut raw = Vec::new();
        let mut dims = Vec::new();
        for _ in 0..RANDOM_RELATIONS {
            let r = LinearRelation::random(space, space, &mut rng)?;
            dims.push(r.graph().dim());
            let (push, pull) = r.tables(self.grass, self.grass)?;
            raw.extend(is_structural_pair("(r_*, r^*)", &push, &pull, self.grass, &self.gamma, self.grass, &self.gamma, budget, seed));
        }
        let notes = vec![format!("graph dimensions of the {RANDOM_RELATIONS} relations: {dims:?}")];
        Ok((merged(raw), notes))
    }

    fn thm27(&self, budget: u64, seed: u64) -> Result<Outcome> {
        let n = self.n();
        let e = self.e();
        let space = self.grass.space();
        let mut checks = Vec::new();
        for family in PartialMap::ALL {
            checks.extend(structural_family_check(family, self.grass, &self.gamma, budget, seed));
        }
        // each parameter tuple costs one relation and n push-forwards
        let per = share(budget, n);
        let mut failure: Option<Error> = None;
        checks.push(scan_tuples("l_xayb pushes forward to L_xayb and pulls back to L_yaxb", &[n; 4], per, seed, |t| {
            let (x, a, y, b) = (t[0], t[1], t[2], t[3]);
            let rel = match left_mult_relation(space, &e[x], &e[a], &e[y], &e[b]) {
                Ok(r) => r,
                Err(er) => return Some(Err(self.fail(t, "a relation", er.to_string()))),
            };
            Some((0..n).try_for_each(|z| {
                let args = [x, a, y, b, z];
                let push = rel.pushforward(&e[z]).map_err(|er| self.fail(&args, "a push-forward", er.to_string()))?;
                let pull = rel.pullback(&e[z]).map_err(|er| self.fail(&args, "a pull-back", er.to_string()))?;
                self.subspace_eq(&args, self.g(x, a, y, b, z), &push)?;
                self.subspace_eq(&args, self.g(y, a, x, b, z), &pull)
            }))
        }));
        checks.push(scan_tuples("l_xayb⁻¹ = l_yaxb", &[n; 4], budget, seed, |t| {
            let (x, a, y, b) = (t[0], t[1], t[2], t[3]);
            let both = left_mult_relation(space, &e[x], &e[a], &e[y], &e[b])
                .and_then(|l| Ok((l, left_mult_relation(space, &e[y], &e[a], &e[x], &e[b])?)));
            Some(match both {
                Ok((l, r)) if l.reverse().graph() == r.graph() => Ok(()),
                Ok((l, r)) => Err(self.fail(t, &r.graph().to_literal(), l.reverse().graph().to_literal())),
                Err(er) => {
                    failure.get_or_insert(er);
                    Err(self.fail(t, "a relation", "construction failed"))
                }
            })
        }));
        checks.push(scan_tuples("l_xayb is the graph of L_xayb for x ⊤ a, y ⊤ b", &[n; 4], budget, seed, |t| {
            let (x, a, y, b) = (t[0], t[1], t[2], t[3]);
            if !(self.tr[x][a] && self.tr[y][b]) {
                return None;
            }
            Some(match left_mult_relation(space, &e[x], &e[a], &e[y], &e[b]) {
                Ok(l) if l.as_map().is_some() => Ok(()),
                Ok(_) => Err(self.fail(t, "graph of an operator", "not a graph")),
                Err(er) => Err(self.fail(t, "a relation", er.to_string())),
            })
        }));
        if let Some(er) = failure {
            return Err(er);
        }
        Ok((checks, vec![]))
    }

    fn cor28(&self, budget: u64, seed: u64) -> Outcome {
        let n = self.n();
        let g = |x, a, y, b, z| self.g(x, a, y, b, z);
        let checks = vec![
            scan_tuples("self-distributivity through (M_xabz, M_zabx)", &[n; 9], budget, seed, |t| {
                let (x, a, b, z, u, v, w, c, d) = (t[0], t[1], t[2], t[3], t[4], t[5], t[6], t[7], t[8]);
                let lhs = g(x, a, g(u, g(a, z, c, x, b), v, g(a, z, d, x, b), w), b, z);
                let rhs = g(g(x, a, u, b, z), c, g(x, a, v, b, z), d, g(x, a, w, b, z));
                Some(self.cmp(t, rhs, lhs))
            }),
            scan_tuples("self-distributivity through (L_xayb, L_yaxb)", &[n; 9], budget, seed, |t| {
                let (x, a, y, b, u, v, w, c, d) = (t[0], t[1], t[2], t[3], t[4], t[5], t[6], t[7], t[8]);
                let lhs = g(x, a, y, b, g(u, g(y, a, x, b, c), v, g(y, a, x, b, d), w));
                let rhs = g(g(x, a, y, b, u), c, g(x, a, y, b, v), d, g(x, a, y, b, w));
                Some(self.cmp(t, rhs, lhs))
            }),
        ];
        (checks, vec![])
    }

    /// `prod` maps U_p × U_q × U_p into U_p; checks that, and that it is
    /// affine in each variable for the structures x +_w x' = Γ(x,p,w,p,x')
    /// and Π_r(x,p,x'). With `para`, also the para-associative law.
    #[allow(clippy::too_many_arguments)]
    fn triaffine_scans(
        &self,
        label: &str,
        p: usize,
        q: usize,
        prod: &dyn Fn(usize, usize, usize) -> usize,
        para: bool,
        budget: u64,
        seed: u64,
    ) -> Vec<CheckReport> {
        let (o, m) = (self.cab(p, p), self.cab(q, q));
        let (lo, lm) = (o.len(), m.len());
        let k = self.field().order();
        let pis = self.pis();
        let add_p = |x, w, y| self.g(x, p, w, p, y);
        let add_q = |x, w, y| self.g(x, q, w, q, y);
        let name = |s: &str| format!("{label}: {s}");
        let mut out = vec![scan_tuples(&name("maps into the outer carrier"), &[lo, lm, lo], budget, seed, |t| {
            let (x, y, z) = (o[t[0]], m[t[1]], o[t[2]]);
            Some(self.in_set(&[x, y, z, p, q], prod(x, y, z), o, "the outer carrier"))
        })];
        out.push(scan_tuples(&name("affine in the first variable"), &[lo, lo, lo, lm, lo], budget, seed, |t| {
            let (x, w, x2, y, z) = (o[t[0]], o[t[1]], o[t[2]], m[t[3]], o[t[4]]);
            let lhs = prod(add_p(x, w, x2), y, z);
            Some(self.cmp(&[x, w, x2, y, z], add_p(prod(x, y, z), prod(w, y, z), prod(x2, y, z)), lhs))
        }));
        out.push(scan_tuples(&name("affine in the middle variable"), &[lo, lm, lm, lm, lo], budget, seed, |t| {
            let (x, y, w, y2, z) = (o[t[0]], m[t[1]], m[t[2]], m[t[3]], o[t[4]]);
            let lhs = prod(x, add_q(y, w, y2), z);
            Some(self.cmp(&[x, y, w, y2, z], add_p(prod(x, y, z), prod(x, w, z), prod(x, y2, z)), lhs))
        }));
        out.push(scan_tuples(&name("affine in the last variable"), &[lo, lm, lo, lo, lo], budget, seed, |t| {
            let (x, y, z, w, z2) = (o[t[0]], m[t[1]], o[t[2]], o[t[3]], o[t[4]]);
            let lhs = prod(x, y, add_p(z, w, z2));
            Some(self.cmp(&[x, y, z, w, z2], add_p(prod(x, y, z), prod(x, y, w), prod(x, y, z2)), lhs))
        }));
        out.push(scan_tuples(&name("commutes with dilations in the first variable"), &[k, lo, lo, lm, lo], budget, seed, |t| {
            let (pi, x, x2, y, z) = (&pis[t[0]], o[t[1]], o[t[2]], m[t[3]], o[t[4]]);
            Some(self.cmp(&[x, x2, y, z], pi.pi(prod(x, y, z), p, prod(x2, y, z)), prod(pi.pi(x, p, x2), y, z)))
        }));
        out.push(scan_tuples(&name("commutes with dilations in the middle variable"), &[k, lo, lm, lm, lo], budget, seed, |t| {
            let (pi, x, y, y2, z) = (&pis[t[0]], o[t[1]], m[t[2]], m[t[3]], o[t[4]]);
            Some(self.cmp(&[x, y, y2, z], pi.pi(prod(x, y, z), p, prod(x, y2, z)), prod(x, pi.pi(y, q, y2), z)))
        }));
        out.push(scan_tuples(&name("commutes with dilations in the last variable"), &[k, lo, lm, lo, lo], budget, seed, |t| {
            let (pi, x, y, z, z2) = (&pis[t[0]], o[t[1]], m[t[2]], o[t[3]], o[t[4]]);
            Some(self.cmp(&[x, y, z, z2], pi.pi(prod(x, y, z), p, prod(x, y, z2)), prod(x, y, pi.pi(z, p, z2))))
        }));
        if para {
            out.push(scan_tuples(&name("para-associative"), &[lo, lm, lo, lm, lo], budget, seed, |t| {
                let (x, y, u, v, w) = (o[t[0]], m[t[1]], o[t[2]], m[t[3]], o[t[4]]);
                let args = [x, y, u, v, w];
                let first = prod(x, y, prod(u, v, w));
                Some(self.cmp(&args, first, prod(prod(x, y, u), v, w)).and_then(|_| self.cmp(&args, first, prod(x, prod(v, u, y), w))))
            }));
        }
        out
    }

    fn cor29(&self, budget: u64, seed: u64) -> Outcome {
        let n = self.n();
        let per = share(budget, 2 * n * n);
        let mut raw = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let prod = |x, y, z| self.g(x, a, y, b, z);
                raw.extend(self.triaffine_scans("(xyz)+ on U_a×U_b×U_a", a, b, &prod, true, per, seed));
                raw.extend(self.triaffine_scans("(xyz)- on U_b×U_a×U_b", b, a, &prod, true, per, seed));
            }
        }
        (merged(raw), vec![])
    }

    fn thm210(&self, budget: u64, seed: u64) -> Result<Outcome> {
        let n = self.n();
        let e = self.e();
        let f = self.field();
        let q = f.order();
        let pis = self.pis();
        let (mt, jt) = self.lattice();
        let ri = |v: F::Elem| f.index_of(v);
        let (zero, one) = (ri(f.zero()), ri(f.one()));
        let pairs = self.transversal_pairs();
        let mut checks = Vec::new();
        checks.push(scan_tuples("Π_r(x,a,z) = δ^r_xa(z) for x ⊤ a", &[pairs.len(), q, n], budget, seed, |t| {
            let ((a, x), r, z) = (pairs[t[0]], t[1], t[2]);
            let args = [x, a, z];
            Some(match delta_operator(f.element(r), &e[x], &e[a]) {
                Ok(d) => self.subspace_eq(&args, pis[r].pi(x, a, z), &d.apply(&e[z])),
                Err(er) => Err(self.fail(&args, "an operator", er.to_string())),
            })
        }));
        checks.push(scan_tuples("Π_r(x,a,z) = Π_{1−r}(z,a,x)", &[q, n, n, n], budget, seed, |t| {
            let (r, x, a, z) = (t[0], t[1], t[2], t[3]);
            let s = ri(f.sub(f.one(), f.element(r)));
            Some(self.cmp(&t[1..], pis[r].pi(x, a, z), pis[s].pi(z, a, x)))
        }));
        checks.push(scan_tuples("Π_r(x,a,Π_s(x,a,y)) = Π_rs(x,a,y) for x ⊤ a", &[pairs.len(), q, q, n], budget, seed, |t| {
            let ((a, x), r, s, y) = (pairs[t[0]], t[1], t[2], t[3]);
            let rs = ri(f.mul(f.element(r), f.element(s)));
            Some(self.cmp(&[x, a, y], pis[rs].pi(x, a, y), pis[r].pi(x, a, pis[s].pi(x, a, y))))
        }));
        checks.push(scan_tuples("Π_r(x,a,x) = x", &[q, n, n], budget, seed, |t| {
            let (r, x, a) = (t[0], t[1], t[2]);
            Some(self.cmp(&t[1..], x, pis[r].pi(x, a, x)))
        }));
        checks.push(scan_tuples("Π_0(x,a,z) = Π_1(z,a,x) = x ∧ (z ∨ a) = Γ(x,a,a,x,z)", &[n; 3], budget, seed, |t| {
            let (x, a, z) = (t[0], t[1], t[2]);
            let v = mt[x][jt[z][a]];
            Some(
                self.cmp(t, v, pis[zero].pi(x, a, z))
                    .and_then(|_| self.cmp(t, v, pis[one].pi(z, a, x)))
                    .and_then(|_| self.cmp(t, v, self.g(x, a, a, x, z))),
            )
        }));
        // structurality of (λ_xa, λ_ax) and (μ_xz, μ_zx)
        let mut notes = Vec::new();
        let mut invertible = Vec::new();
        for r in 0..q {
            let rv = f.element(r);
            let c = f.mul(rv, f.sub(f.one(), rv));
            let label = f.format(rv);
            let lambda = |p: usize, s: usize, w: usize| pis[r].pi(p, s, w);
            let mu = |p: usize, s: usize, w: usize| pis[r].pi(p, w, s);
            let mut family = Vec::new();
            for (name, map) in [("(λ_xa, λ_ax)", &lambda as &dyn Fn(usize, usize, usize) -> usize), ("(μ_xz, μ_zx)", &mu)] {
                for forward in [true, false] {
                    let side = if forward { "f" } else { "g" };
                    family.push(scan_tuples(&format!("{name} structural for r = {label}, {side} side"), &[n; 7], budget, seed, |t| {
                        let (u, v) = (t[0], t[1]);
                        let (x, a, y, b, z) = (t[2], t[3], t[4], t[5], t[6]);
                        let (h, k): (Box<dyn Fn(usize) -> usize>, Box<dyn Fn(usize) -> usize>) = if forward {
                            (Box::new(|w| map(u, v, w)), Box::new(|w| map(v, u, w)))
                        } else {
                            (Box::new(|w| map(v, u, w)), Box::new(|w| map(u, v, w)))
                        };
                        Some(self.cmp(t, self.g(h(x), a, h(y), b, h(z)), h(self.g(x, k(a), y, k(b), z))))
                    }));
                }
            }
            if c == f.zero() {
                for rep in family {
                    notes.push(format!(
                        "{} (r(1−r) = 0, not asserted): {} tuples, {} failures",
                        rep.axiom, rep.tuples_checked, rep.failure_count
                    ));
                }
            } else {
                invertible.push(label);
                checks.extend(family);
            }
        }
        if invertible.is_empty() {
            notes.push("no scalar r has r(1−r) invertible; structurality is not asserted".into());
        }
        Ok((checks, notes))
    }

    fn prop31(&self, budget: u64, seed: u64) -> Outcome {
        let mut checks = self.torsor_scans(budget, seed);
        checks.extend(self.action_scans(budget, seed));
        (checks, vec![])
    }

    fn lemma32(&self, budget: u64, seed: u64) -> Outcome {
        let n = self.n();
        let mut raw = vec![
            scan_tuples("Γ(x,b,Γ(x,a,y,b,z),b,z) = Γ(z,b,a,y,x)", &[n; 5], budget, seed, |t| {
                let (x, a, y, b, z) = (t[0], t[1], t[2], t[3], t[4]);
                if !(self.tr[z][b] && self.tr[x][a] && self.tr[x][b]) {
                    return None;
                }
                Some(self.cmp(t, self.g(z, b, a, y, x), self.g(x, b, self.g(x, a, y, b, z), b, z)))
            }),
            scan_tuples("Γ(x,a,y,b,z) = Γ(z,b,Γ(z,b,a,y,x),b,x)", &[n; 5], budget, seed, |t| {
                let (x, a, y, b, z) = (t[0], t[1], t[2], t[3], t[4]);
                if !(self.tr[z][b] && self.tr[x][a] && self.tr[x][b]) {
                    return None;
                }
                Some(self.cmp(t, self.g(x, a, y, b, z), self.g(z, b, self.g(z, b, a, y, x), b, x)))
            }),
        ];
        let per = share(budget, n * n);
        for b in 0..n {
            for y in 0..n {
                let prod = |x, a, z| self.g(x, a, y, b, z);
                raw.extend(self.triaffine_scans("(x,a,z) ↦ Γ(x,a,y,b,z) on U_b×U_y×U_b", b, y, &prod, false, per, seed));
            }
        }
        (merged(raw), vec![])
    }

    fn thm33(&self, budget: u64, seed: u64) -> Outcome {
        let e = self.e();
        let f = self.field();
        let n = self.n();
        let pairs = self.transversal_pairs();
        let mut triples = Vec::new();
        for &(a, b) in &pairs {
            for &c in self.cab(a, b) {
                if self.tr[a][b] {
                    triples.push((a, b, c));
                }
            }
        }
        let mut raw = Vec::new();
        let per = share(budget, pairs.len() + triples.len());
        for &(op, om) in &pairs {
            match extract_pair(self.grass, &self.gamma, &e[op], &e[om], per, seed) {
                Ok(ext) => {
                    raw.extend(ext.checks().iter().cloned());
                    let coords = ext.coordinatize(f);
                    raw.push(CheckReport::single("coordinates give an associative pair", coords.is_ok(), || Failure {
                        tuple: lit(self.grass, &[op, om]),
                        expected: "an associative pair".into(),
                        actual: coords.as_ref().err().map(|er| er.to_string()).unwrap_or_default(),
                    }));
                }
                Err(er) => raw.push(failed_step("pair extraction", &er)),
            }
        }
        for &(a, b, c) in &triples {
            match extract_algebra(self.grass, &self.gamma, &e[a], &e[b], &e[c], per, seed) {
                Ok(alg) => {
                    raw.extend(alg.checks().iter().cloned());
                    let unital = alg.to_unital(f);
                    raw.push(CheckReport::single("coordinates give a unital associative algebra", unital.is_ok(), || Failure {
                        tuple: lit(self.grass, &[a, b, c]),
                        expected: "a unital algebra".into(),
                        actual: unital.as_ref().err().map(|er| er.to_string()).unwrap_or_default(),
                    }));
                }
                Err(er) => raw.push(failed_step("algebra extraction", &er)),
            }
        }
        let mut notes = vec![format!("{} transversal pairs, {} transversal triples among {n} elements", pairs.len(), triples.len())];
        if triples.is_empty() {
            notes.push("no mutually transversal triple exists in this space".into());
        }
        (merged(raw), notes)
    }

    fn thm34(&self, budget: u64, seed: u64) -> Outcome {
        let f = self.field().clone();
        let mut raw = Vec::new();
        let mut notes = vec![format!("pairs are built over {}", f.spec())];
        let scalars = UnitalAlgebra::scalars(f.clone());
        let pairs = [
            ("algebra pair of the scalars", AssociativePair::from_algebra(&scalars)),
            ("operator pair (1,1)", AssociativePair::operator_pair(f.clone(), 1, 1)),
            ("zero pair", AssociativePair::zero(f.clone())),
        ];
        for (name, p) in &pairs {
            match pair_roundtrip_check(p, budget, seed) {
                Ok(rt) => {
                    raw.push(CheckReport::single("round trip holds", rt.holds, || Failure {
                        tuple: vec![name.to_string()],
                        expected: "round trip".into(),
                        actual: "mismatch".into(),
                    }));
                    raw.extend(rt.checks);
                    notes.push(format!("{name}: {} right ideals", rt.ideals));
                }
                Err(er @ Error::TooLarge(_)) => notes.push(format!("{name}: skipped, {er}")),
                Err(er) => raw.push(failed_step(&format!("round trip of the {name}"), &er)),
            }
        }
        match self.imbedded_algebra_check(&scalars, budget, seed) {
            Ok(checks) => raw.extend(checks),
            Err(er @ Error::TooLarge(_)) => notes.push(format!("imbedding of the scalars: skipped, {er}")),
            Err(er) => raw.push(failed_step("imbedding of the scalars", &er)),
        }
        (merged(raw), notes)
    }

    /// (o⁺, Δ, o⁻) in the imbedding of 𝔸 is mutually transversal and gives
    /// back an algebra of the same dimension.
    fn imbedded_algebra_check(&self, alg: &UnitalAlgebra<F>, budget: u64, seed: u64) -> Result<Vec<CheckReport>> {
        let imb = StandardImbedding::of_algebra(alg)?;
        let grass = Grassmannian::new(imb.space().clone())?;
        let gamma = GammaOracle::new(&grass);
        let diag = imb.diagonal().ok_or(Error::HypothesisNotMet("algebra pairs have a diagonal"))?;
        let (op, om) = (imb.o_plus(), imb.o_minus());
        let mutual = crate::modspace::transversal(op, diag) && crate::modspace::transversal(diag, om) && crate::modspace::transversal(op, om);
        let mut out = vec![CheckReport::single("(o+, Δ, o-) mutually transversal", mutual, || Failure {
            tuple: vec![op.to_literal(), diag.to_literal(), om.to_literal()],
            expected: "mutually transversal".into(),
            actual: "not".into(),
        })];
        out.push(CheckReport::single("Peirce decomposition is direct", imb.peirce()?.is_direct_sum(), || Failure {
            tuple: vec![],
            expected: "direct sum".into(),
            actual: "not direct".into(),
        }));
        if mutual {
            let ext = extract_algebra(&grass, &gamma, op, diag, om, budget, seed)?;
            out.extend(ext.checks().iter().cloned());
            let back = ext.to_unital(alg.field())?;
            let same = back.dim() == alg.dim() && back.algebra().is_commutative() == alg.algebra().is_commutative();
            out.push(CheckReport::single("algebra at (o+, Δ, o-) matches", same, || Failure {
                tuple: vec![],
                expected: format!("dimension {}", alg.dim()),
                actual: format!("dimension {}", back.dim()),
            }));
        }
        Ok(out)
    }

    fn appendix_a(&self, budget: u64, seed: u64) -> Outcome {
        let pairs = self.complemented_pairs();
        let per = share(budget, pairs.len());
        let mut raw = Vec::new();
        for &(a, b) in &pairs {
            let c = self.cab(a, b);
            let local = |v: usize| c.iter().position(|&w| w == v);
            let closed = c.iter().all(|&x| c.iter().all(|&y| c.iter().all(|&z| local(self.g(x, a, y, b, z)).is_some())));
            if !closed {
                raw.push(CheckReport::single("U_ab is closed", false, || self.fail(&[a, b], "closed carrier", "not closed")));
                continue;
            }
            let labels = c.iter().map(|&i| self.grass.get(i).to_literal()).collect();
            let t = TernaryTable::from_fn(labels, c.to_vec(), |x, y, z| local(self.g(c[x], a, c[y], b, c[z])).unwrap_or(0));
            raw.extend(torsor_identities_with(&t, per, seed));
            match group_view(&t, 0) {
                Ok(v) => raw.extend(v.check_group_axioms()),
                Err(er) => raw.push(failed_step("group view", &er)),
            }
        }
        (merged(raw), vec![])
    }

    fn appendix_b(&self, budget: u64, seed: u64) -> Outcome {
        let e = self.e();
        let f = self.field();
        let q = f.order();
        let pairs: Vec<(usize, usize)> = self.transversal_pairs();
        let per = share(budget, pairs.len());
        let mut raw = Vec::new();
        for &(op, om) in &pairs {
            let pair = extract_pair(self.grass, &self.gamma, &e[op], &e[om], per, seed).and_then(|ext| ext.coordinatize(f));
            let p = match pair {
                Ok((p, _)) => p,
                Err(er) => {
                    raw.push(failed_step("pair extraction", &er));
                    continue;
                }
            };
            raw.extend(p.para_associativity_check());
            for sign in [Sign::Plus, Sign::Minus] {
                let (d, dm) = (p.dim(sign), p.dim(sign.flip()));
                let (size, size_m) = match (q.checked_pow(d as u32), q.checked_pow(dm as u32)) {
                    (Some(a), Some(b)) => (a, b),
                    _ => continue,
                };
                let vec_of = |mut i: usize, len: usize| -> Vec<F::Elem> {
                    (0..len)
                        .map(|_| {
                            let c = f.element(i % q);
                            i /= q;
                            c
                        })
                        .collect()
                };
                let show = |v: &[F::Elem]| format!("{:?}", v.iter().map(|&c| f.format(c)).collect::<Vec<_>>());
                let s = sign.symbol();
                raw.push(scan_tuples(&format!("T{s}(x,y,z) = <xyz> + <zyx>, Q{s}(x)y = <xyx>"), &[size, size_m, size], per, seed, |t| {
                    let (x, y, z) = (vec_of(t[0], d), vec_of(t[1], dm), vec_of(t[2], d));
                    let ok = p.jordan_t(sign, &x, &y, &z) == crate::pairs::add_vec(f, &p.triple(sign, &x, &y, &z), &p.triple(sign, &z, &y, &x))
                        && p.jordan_q(sign, &x).apply(&y) == p.triple(sign, &x, &y, &x);
                    Some(if ok {
                        Ok(())
                    } else {
                        Err(Failure { tuple: vec![show(&x), show(&y), show(&z)], expected: "polarization".into(), actual: "mismatch".into() })
                    })
                }));
                raw.push(scan_tuples(&format!("homotopes of A{s} are associative, unital exactly at invertible elements"), &[size_m], per, seed, |t| {
                    let a = vec_of(t[0], dm);
                    let h = p.homotope(sign, &a);
                    let unit = h.unit();
                    let inv = p.inverse(sign.flip(), &a);
                    Some(if h.is_associative() && unit == inv {
                        Ok(())
                    } else {
                        Err(Failure {
                            tuple: vec![show(&a)],
                            expected: inv.map_or("no unit".into(), |v| show(&v)),
                            actual: unit.map_or("no unit".into(), |v| show(&v)),
                        })
                    })
                }));
            }
        }
        (merged(raw), vec![format!("{} transversal pairs", pairs.len())])
    }

    pub fn cross_routes(&self, budget: u64, seed: u64) -> Result<SuiteReport> {
        if budget == 0 {
            return Err(Error::HypothesisNotMet("budget ≥ 1"));
        }
        let start = Instant::now();
        let n = self.n();
        let e = self.e();
        let f = self.field();
        let mut checks = Vec::new();
        let mut notes = Vec::new();
        match ScanSpace::new(f, self.grass.space().dim()) {
            Ok(scan) => {
                let ex: Vec<_> = e.iter().map(|s| scan.expand(s)).collect();
                checks.push(scan_tuples("extended route = vector scan", &[n; 5], budget, seed, |t| {
                    let (x, a, y, b, z) = (t[0], t[1], t[2], t[3], t[4]);
                    Some(match scan.gamma(&ex[x], &ex[a], &ex[y], &ex[b], &ex[z]) {
                        Ok(v) => self.subspace_eq(t, self.g(x, a, y, b, z), &v),
                        Err(er) => Err(self.fail(t, "a subspace", er.to_string())),
                    })
                }));
                let pis = self.pis();
                checks.push(scan_tuples("extended Π_r = vector scan", &[f.order(), n, n, n], budget, seed, |t| {
                    let (r, x, a, z) = (t[0], t[1], t[2], t[3]);
                    Some(match scan.pi(f.element(r), &ex[x], &ex[a], &ex[z]) {
                        Ok(v) => self.subspace_eq(&t[1..], pis[r].pi(x, a, z), &v),
                        Err(er) => Err(self.fail(&t[1..], "a subspace", er.to_string())),
                    })
                }));
            }
            Err(er) => notes.push(format!("vector scan skipped: {er}")),
        }
        checks.push(self.operator_route_scan(budget, seed));
        checks.push(scan_tuples("operator route reports OutsideDomain off D(Γ)", &[n; 5], budget, seed, |t| {
            let (x, a, y, b, z) = (t[0], t[1], t[2], t[3], t[4]);
            if self.flags(x, a, y, b, z).any() {
                return None;
            }
            Some(match gamma_operator_route(&e[x], &e[a], &e[y], &e[b], &e[z], e) {
                Err(Error::OutsideDomain) => Ok(()),
                Err(er) => Err(self.fail(t, "OutsideDomain", er.to_string())),
                Ok(v) => Err(self.fail(t, "OutsideDomain", v.to_literal())),
            })
        }));
        let dim = self.grass.space().dim();
        if self.grass.space().generators().is_empty() && dim >= 2 {
            let minus_dim = dim / 2;
            let chart = AffineChart::new(f, minus_dim, dim - minus_dim);
            let plus: Vec<usize> = (0..n).filter(|&i| chart.plus_coordinate(&e[i]).is_some()).collect();
            let minus: Vec<usize> = (0..n).filter(|&i| chart.minus_coordinate(&e[i]).is_some()).collect();
            let (lp, lm) = (plus.len(), minus.len());
            checks.push(scan_tuples("affine chart = extended route on quasi-invertible tuples", &[lp, lm, lp, lm, lp], budget, seed, |t| {
                let tuple = [plus[t[0]], minus[t[1]], plus[t[2]], minus[t[3]], plus[t[4]]];
                let [x, a, y, b, z] = tuple;
                match chart.gamma_subspaces(&e[x], &e[a], &e[y], &e[b], &e[z]) {
                    Ok(v) => Some(self.subspace_eq(&tuple, self.g(x, a, y, b, z), &v.subspace)),
                    Err(Error::NotQuasiInvertible(_)) => None,
                    Err(er) => Some(Err(self.fail(&tuple, "a chart value", er.to_string()))),
                }
            }));
            notes.push(format!("affine chart split {}+{}", minus_dim, dim - minus_dim));
        }
        Ok(self.report(
            "routes",
            budget,
            seed,
            "agreement of the evaluation routes",
            "operator, extended, vector-scan and affine-chart values of Γ coincide wherever defined",
            checks,
            notes,
            start,
        ))
    }
}
