use std::collections::HashMap;

use super::{unit_vec, AssociativePair, PairOrigin, Sign, UnitalAlgebra, Algebra};
use crate::error::{Error, Result};
use crate::exactla::FiniteField;
use crate::gamma::pi_extended;
use crate::modspace::{transversal, Subspace};
use crate::oracle::{scan_tuples, CheckReport, Failure, Grassmannian, Quintary};

/// A finite 𝕂-module known only through its addition and scaling tables.
/// Elements are local indices; `ids` maps them to Grassmannian indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModule {
    ids: Vec<usize>,
    zero: usize,
    add: Vec<usize>,
    /// scale[i][x] = element(i)·x
    scale: Vec<Vec<usize>>,
}

impl FiniteModule {
    /// The affine structure on U_base with origin `origin`:
    /// x + z = Γ(x, base, origin, base, z), r·x = Π_r(origin, base, x).
    fn affine<F: FiniteField>(grass: &Grassmannian<F>, gamma: &impl Quintary, base: usize, origin: usize) -> Result<Self> {
        let e = grass.elements();
        let ids: Vec<usize> = (0..grass.len()).filter(|&i| transversal(&e[i], &e[base])).collect();
        let local: HashMap<usize, usize> = ids.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        let find = |g: usize, t: &[usize]| local.get(&g).copied().ok_or_else(|| Error::ClosureViolation(t.to_vec()));
        let zero = find(origin, &[origin])?;
        let n = ids.len();
        let mut add = Vec::with_capacity(n * n);
        for &x in &ids {
            for &z in &ids {
                add.push(find(gamma.gamma(x, base, origin, base, z), &[x, base, origin, base, z])?);
            }
        }
        let field = grass.space().field();
        let mut scale = Vec::with_capacity(field.order());
        for r in field.elements() {
            let row: Result<Vec<usize>> = ids
                .iter()
                .map(|&x| find(grass.expect_index(&pi_extended(r, &e[origin], &e[base], &e[x])), &[origin, base, x]))
                .collect();
            scale.push(row?);
        }
        Ok(FiniteModule { ids, zero, add, scale })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn local_index(&self, id: usize) -> Option<usize> {
        self.ids.iter().position(|&g| g == id)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.len() + y]
    }

    /// `r` is a field index.
    pub fn scale(&self, r: usize, x: usize) -> usize {
        self.scale[r][x]
    }

    /// Module axioms, exhaustively or sampled under `budget`.
    pub fn check<F: FiniteField>(&self, field: &F, name: &str, budget: u64, seed: u64) -> Vec<CheckReport> {
        let n = self.len();
        let q = field.order();
        let el = |i| field.element(i);
        let idx = |v| field.index_of(v);
        let fail = |t: &[usize], l: usize, r: usize| Failure {
            tuple: t.iter().map(|i| i.to_string()).collect(),
            expected: l.to_string(),
            actual: r.to_string(),
        };
        let eq = |t: &[usize], l: usize, r: usize| Some(if l == r { Ok(()) } else { Err(fail(t, l, r)) });
        let one = idx(field.one());
        let minus_one = idx(field.neg(field.one()));
        vec![
            scan_tuples(&format!("{name}: addition associative"), &[n, n, n], budget, seed, |t| {
                eq(t, self.add(self.add(t[0], t[1]), t[2]), self.add(t[0], self.add(t[1], t[2])))
            }),
            scan_tuples(&format!("{name}: addition commutative"), &[n, n], budget, seed, |t| {
                eq(t, self.add(t[0], t[1]), self.add(t[1], t[0]))
            }),
            scan_tuples(&format!("{name}: zero and negatives"), &[n], budget, seed, |t| {
                let ok = self.add(t[0], self.zero) == t[0] && self.add(t[0], self.scale(minus_one, t[0])) == self.zero;
                eq(t, ok as usize, 1)
            }),
            scan_tuples(&format!("{name}: r(x + y) = rx + ry"), &[q, n, n], budget, seed, |t| {
                eq(t, self.scale(t[0], self.add(t[1], t[2])), self.add(self.scale(t[0], t[1]), self.scale(t[0], t[2])))
            }),
            scan_tuples(&format!("{name}: (r + s)x = rx + sx"), &[q, q, n], budget, seed, |t| {
                let rs = idx(field.add(el(t[0]), el(t[1])));
                eq(t, self.scale(rs, t[2]), self.add(self.scale(t[0], t[2]), self.scale(t[1], t[2])))
            }),
            scan_tuples(&format!("{name}: (rs)x = r(sx), 1x = x"), &[q, q, n], budget, seed, |t| {
                let rs = idx(field.mul(el(t[0]), el(t[1])));
                let ok = self.scale(rs, t[2]) == self.scale(t[0], self.scale(t[1], t[2])) && self.scale(one, t[2]) == t[2];
                eq(t, ok as usize, 1)
            }),
        ]
    }

    /// Coordinates in a greedily chosen basis. Fails if the tables are not
    /// those of a free module of the expected size.
    pub fn coordinates<F: FiniteField>(&self, field: &F) -> Result<Vec<Vec<F::Elem>>> {
        let n = self.len();
        let mut coords: Vec<Option<Vec<F::Elem>>> = vec![None; n];
        coords[self.zero] = Some(Vec::new());
        let mut k = 0;
        while let Some(b) = coords.iter().position(Option::is_none) {
            let covered: Vec<(usize, Vec<F::Elem>)> =
                coords.iter().enumerate().filter_map(|(i, c)| c.clone().map(|c| (i, c))).collect();
            for c in coords.iter_mut().flatten() {
                c.push(field.zero());
            }
            for (s, c) in &covered {
                for r in 0..field.order() {
                    let e = self.add(*s, self.scale(r, b));
                    let mut v = c.clone();
                    v.push(field.element(r));
                    match &coords[e] {
                        Some(old) if *old != v => {
                            return Err(Error::OracleInconsistency(format!("element {e} has two coordinate vectors")));
                        }
                        _ => coords[e] = Some(v),
                    }
                }
            }
            k += 1;
        }
        let out: Vec<Vec<F::Elem>> = coords.into_iter().map(|c| c.expect("all covered")).collect();
        if field.order().checked_pow(k as u32) != Some(n) {
            return Err(Error::OracleInconsistency("carrier size is not a power of the field order".into()));
        }
        Ok(out)
    }
}

fn literal<F: FiniteField>(grass: &Grassmannian<F>, id: usize) -> String {
    grass.get(id).to_literal()
}

fn lookup<F: FiniteField>(grass: &Grassmannian<F>, s: &Subspace<F>) -> Result<usize> {
    if s.ambient_dim() != grass.space().dim() {
        return Err(Error::MixedSpaces);
    }
    grass.index_of(s).ok_or(Error::OutsideDomain)
}

/// The pair (U_{o⁻}, U_{o⁺}) with its linear structures and triple tables.
#[derive(Clone, Debug)]
pub struct ExtractedPair {
    o_plus: usize,
    o_minus: usize,
    plus: FiniteModule,
    minus: FiniteModule,
    /// triple_plus[(x·|A⁻| + b)·|A⁺| + z], local indices
    triple_plus: Vec<usize>,
    triple_minus: Vec<usize>,
    checks: Vec<CheckReport>,
}

impl ExtractedPair {
    pub fn o_plus(&self) -> usize {
        self.o_plus
    }

    pub fn o_minus(&self) -> usize {
        self.o_minus
    }

    pub fn carrier(&self, sign: Sign) -> &FiniteModule {
        match sign {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    /// ⟨xyz⟩^σ on local indices.
    pub fn triple(&self, sign: Sign, x: usize, y: usize, z: usize) -> usize {
        let (n, m) = (self.carrier(sign).len(), self.carrier(sign.flip()).len());
        let t = match sign {
            Sign::Plus => &self.triple_plus,
            Sign::Minus => &self.triple_minus,
        };
        t[(x * m + y) * n + z]
    }

    pub fn checks(&self) -> &[CheckReport] {
        &self.checks
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    /// Structure constants in bases chosen from the carriers, with the
    /// coordinate vector of every carrier element.
    pub fn coordinatize<F: FiniteField>(&self, field: &F) -> Result<(AssociativePair<F>, [Vec<Vec<F::Elem>>; 2])> {
        let cp = self.plus.coordinates(field)?;
        let cm = self.minus.coordinates(field)?;
        let basis = |c: &[Vec<F::Elem>]| -> Vec<usize> {
            let d = c[0].len();
            (0..d).map(|i| c.iter().position(|v| *v == unit_vec(field, d, i)).expect("basis vector present")).collect()
        };
        let (bp, bm) = (basis(&cp), basis(&cm));
        let pair = AssociativePair::build(
            field.clone(),
            bp.len(),
            bm.len(),
            PairOrigin::Abstract,
            |i, j, k| cp[self.triple(Sign::Plus, bp[i], bm[j], bp[k])].clone(),
            |i, j, k| cm[self.triple(Sign::Minus, bm[i], bp[j], bm[k])].clone(),
        );
        Ok((pair, [cp, cm]))
    }
}

/// Carriers A± = U_{o∓} with origins o± and ⟨xbz⟩⁺ = Γ(x, o⁻, b, o⁺, z),
/// ⟨ayc⟩⁻ = Γ(a, o⁻, y, o⁺, c). Linearity, para-associativity and the
/// coordinate identity X − (X − ZAX + Z) + Z = ZAX are checked under `budget`.
pub fn extract_pair<F: FiniteField>(
    grass: &Grassmannian<F>,
    gamma: &impl Quintary,
    o_plus: &Subspace<F>,
    o_minus: &Subspace<F>,
    budget: u64,
    seed: u64,
) -> Result<ExtractedPair> {
    if !transversal(o_plus, o_minus) {
        return Err(Error::NotTransversal { first: "o+", second: "o-" });
    }
    let (op, om) = (lookup(grass, o_plus)?, lookup(grass, o_minus)?);
    let plus = FiniteModule::affine(grass, gamma, om, op)?;
    let minus = FiniteModule::affine(grass, gamma, op, om)?;
    let table = |this: &FiniteModule, other: &FiniteModule| -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(this.len() * other.len() * this.len());
        for &x in this.ids() {
            for &y in other.ids() {
                for &z in this.ids() {
                    let v = gamma.gamma(x, om, y, op, z);
                    out.push(this.local_index(v).ok_or_else(|| Error::ClosureViolation(vec![x, om, y, op, z]))?);
                }
            }
        }
        Ok(out)
    };
    let triple_plus = table(&plus, &minus)?;
    let triple_minus = table(&minus, &plus)?;
    let mut pair = ExtractedPair { o_plus: op, o_minus: om, plus, minus, triple_plus, triple_minus, checks: Vec::new() };
    pair.checks = pair_checks(&pair, grass, gamma, budget, seed);
    Ok(pair)
}

fn pair_checks<F: FiniteField>(p: &ExtractedPair, grass: &Grassmannian<F>, gamma: &impl Quintary, budget: u64, seed: u64) -> Vec<CheckReport> {
    let field = grass.space().field();
    let q = field.order();
    let mut out = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        let (this, other) = (p.carrier(sign), p.carrier(sign.flip()));
        let s = sign.symbol();
        out.extend(this.check(field, &format!("A{s}"), budget, seed));
        let (n, m) = (this.len(), other.len());
        let lit = |c: &FiniteModule, i: usize| literal(grass, c.ids()[i]);
        let eq = |t: [(&FiniteModule, usize); 3], l: usize, r: usize| {
            Some(if l == r {
                Ok(())
            } else {
                Err(Failure {
                    tuple: t.iter().map(|&(c, i)| lit(c, i)).collect(),
                    expected: lit(this, l),
                    actual: lit(this, r),
                })
            })
        };
        let tr = |x, y, z| p.triple(sign, x, y, z);
        out.push(scan_tuples(&format!("<..>{s} additive in slot 1"), &[n, n, m, n], budget, seed, |t| {
            eq([(this, t[0]), (other, t[2]), (this, t[3])], tr(this.add(t[0], t[1]), t[2], t[3]), this.add(tr(t[0], t[2], t[3]), tr(t[1], t[2], t[3])))
        }));
        out.push(scan_tuples(&format!("<..>{s} additive in slot 2"), &[n, m, m, n], budget, seed, |t| {
            eq([(this, t[0]), (other, t[1]), (this, t[3])], tr(t[0], other.add(t[1], t[2]), t[3]), this.add(tr(t[0], t[1], t[3]), tr(t[0], t[2], t[3])))
        }));
        out.push(scan_tuples(&format!("<..>{s} additive in slot 3"), &[n, m, n, n], budget, seed, |t| {
            eq([(this, t[0]), (other, t[1]), (this, t[2])], tr(t[0], t[1], this.add(t[2], t[3])), this.add(tr(t[0], t[1], t[2]), tr(t[0], t[1], t[3])))
        }));
        out.push(scan_tuples(&format!("<..>{s} homogeneous"), &[q, n, m, n], budget, seed, |t| {
            let r = t[0];
            let v = this.scale(r, tr(t[1], t[2], t[3]));
            let all = tr(this.scale(r, t[1]), t[2], t[3]) == v && tr(t[1], other.scale(r, t[2]), t[3]) == v && tr(t[1], t[2], this.scale(r, t[3])) == v;
            let seen = if all { v } else { tr(this.scale(r, t[1]), t[2], t[3]) };
            if all || seen != v {
                eq([(this, t[1]), (other, t[2]), (this, t[3])], v, seen)
            } else {
                eq([(this, t[1]), (other, t[2]), (this, t[3])], v, tr(t[1], other.scale(r, t[2]), this.scale(r, t[3])))
            }
        }));
        out.push(scan_tuples(&format!("<x o{} z>{s} = o{s}", sign.flip().symbol()), &[n, n], budget, seed, |t| {
            eq([(this, t[0]), (other, other.zero()), (this, t[1])], this.zero(), tr(t[0], other.zero(), t[1]))
        }));
        let dims = [n, m, n, m, n];
        out.push(scan_tuples(&format!("para-associativity ({s}, outer)"), &dims, budget, seed, |t| {
            let l = tr(t[0], t[1], tr(t[2], t[3], t[4]));
            let r = tr(tr(t[0], t[1], t[2]), t[3], t[4]);
            eq([(this, t[0]), (other, t[1]), (this, t[2])], l, r)
        }));
        out.push(scan_tuples(&format!("para-associativity ({s}, inner)"), &dims, budget, seed, |t| {
            let l = tr(t[0], t[1], tr(t[2], t[3], t[4]));
            let r = tr(t[0], p.triple(sign.flip(), t[3], t[2], t[1]), t[4]);
            eq([(this, t[0]), (other, t[1]), (this, t[2])], l, r)
        }));
    }
    // X − (X − ZAX + Z) + Z = ZAX: Γ(z,o⁻,a,o⁺,x) = Γ(x,o⁻,Γ(x,a,o⁺,o⁻,z),o⁻,z)
    let (op, om) = (p.o_plus, p.o_minus);
    let (pc, mc) = (&p.plus, &p.minus);
    out.push(scan_tuples("coordinate identity X-(X-ZAX+Z)+Z = ZAX", &[pc.len(), mc.len(), pc.len()], budget, seed, |t| {
        let (x, a, z) = (pc.ids()[t[0]], mc.ids()[t[1]], pc.ids()[t[2]]);
        let lhs = gamma.gamma(z, om, a, op, x);
        let inner = gamma.gamma(x, a, op, om, z);
        let rhs = gamma.gamma(x, om, inner, om, z);
        Some(if lhs == rhs {
            Ok(())
        } else {
            Err(Failure {
                tuple: [x, a, z].iter().map(|&i| literal(grass, i)).collect(),
                expected: literal(grass, lhs),
                actual: literal(grass, rhs),
            })
        })
    }));
    out
}

/// The algebra on U_c with origin a and unit b, product xz = Γ(x, c, b, a, z).
#[derive(Clone, Debug)]
pub struct ExtractedAlgebra {
    a: usize,
    b: usize,
    c: usize,
    carrier: FiniteModule,
    unit: usize,
    /// product[x·n + z], local indices
    product: Vec<usize>,
    checks: Vec<CheckReport>,
}

impl ExtractedAlgebra {
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.a, self.b, self.c)
    }

    pub fn carrier(&self) -> &FiniteModule {
        &self.carrier
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn product(&self, x: usize, z: usize) -> usize {
        self.product[x * self.carrier.len() + z]
    }

    pub fn checks(&self) -> &[CheckReport] {
        &self.checks
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    /// Structure constants in a basis chosen from the carrier.
    pub fn to_unital<F: FiniteField>(&self, field: &F) -> Result<UnitalAlgebra<F>> {
        let c = self.carrier.coordinates(field)?;
        let d = c[0].len();
        let basis: Vec<usize> = (0..d).map(|i| c.iter().position(|v| *v == unit_vec(field, d, i)).expect("basis vector")).collect();
        let alg = Algebra::from_basis_products(field.clone(), d, |i, j| c[self.product(basis[i], basis[j])].clone());
        UnitalAlgebra::new(alg, c[self.unit].clone())
    }
}

pub fn extract_algebra<F: FiniteField>(
    grass: &Grassmannian<F>,
    gamma: &impl Quintary,
    a: &Subspace<F>,
    b: &Subspace<F>,
    c: &Subspace<F>,
    budget: u64,
    seed: u64,
) -> Result<ExtractedAlgebra> {
    if !(transversal(a, b) && transversal(b, c) && transversal(a, c)) {
        return Err(Error::NotMutuallyTransversal);
    }
    let (ia, ib, ic) = (lookup(grass, a)?, lookup(grass, b)?, lookup(grass, c)?);
    let carrier = FiniteModule::affine(grass, gamma, ic, ia)?;
    let n = carrier.len();
    let mut product = Vec::with_capacity(n * n);
    for &x in carrier.ids() {
        for &z in carrier.ids() {
            let v = gamma.gamma(x, ic, ib, ia, z);
            product.push(carrier.local_index(v).ok_or_else(|| Error::ClosureViolation(vec![x, ic, ib, ia, z]))?);
        }
    }
    let unit = carrier.local_index(ib).ok_or(Error::UnitNotInCarrier)?;
    let mut alg = ExtractedAlgebra { a: ia, b: ib, c: ic, carrier, unit, product, checks: Vec::new() };
    let field = grass.space().field();
    let m = &alg.carrier;
    let lit = |i: usize| literal(grass, m.ids()[i]);
    let eq = |t: &[usize], l: usize, r: usize| {
        Some(if l == r {
            Ok(())
        } else {
            Err(Failure { tuple: t.iter().map(|&i| lit(i)).collect(), expected: lit(l), actual: lit(r) })
        })
    };
    let mul = |x, z| alg.product(x, z);
    let q = field.order();
    let mut checks = m.check(field, "U_c", budget, seed);
    checks.push(scan_tuples("product additive", &[n, n, n], budget, seed, |t| {
        let l = mul(m.add(t[0], t[1]), t[2]) == m.add(mul(t[0], t[2]), mul(t[1], t[2]));
        let r = mul(t[2], m.add(t[0], t[1])) == m.add(mul(t[2], t[0]), mul(t[2], t[1]));
        eq(t, (l && r) as usize, 1)
    }));
    checks.push(scan_tuples("product homogeneous", &[q, n, n], budget, seed, |t| {
        let v = m.scale(t[0], mul(t[1], t[2]));
        let ok = mul(m.scale(t[0], t[1]), t[2]) == v && mul(t[1], m.scale(t[0], t[2])) == v;
        eq(&t[1..], ok as usize, 1)
    }));
    checks.push(scan_tuples("product associative", &[n, n, n], budget, seed, |t| {
        eq(t, mul(mul(t[0], t[1]), t[2]), mul(t[0], mul(t[1], t[2])))
    }));
    checks.push(scan_tuples("xu = x = ux", &[n], budget, seed, |t| {
        let ok = mul(t[0], unit) == t[0] && mul(unit, t[0]) == t[0];
        eq(t, ok as usize, 1)
    }));
    alg.checks = checks;
    Ok(alg)
}
