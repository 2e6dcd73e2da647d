//! Finite ternary tables: torsors, semitorsors, their group views, and the
//! axiom checks for the Grassmannian geometry.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactla::FiniteField;
use crate::modspace::{join, meet, transversal};
use crate::oracle::{scan_tuples, CheckReport, Failure, Grassmannian, Mode, PiTable, Quintary, Ternary};

/// A ternary product on a finite carrier `0..n`. `ids` records where each
/// element came from (an index into a Grassmannian, say).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryTable {
    labels: Vec<String>,
    ids: Vec<usize>,
    data: Vec<usize>,
}

impl TernaryTable {
    pub fn from_fn(labels: Vec<String>, ids: Vec<usize>, mut product: impl FnMut(usize, usize, usize) -> usize) -> Self {
        let n = labels.len();
        assert_eq!(ids.len(), n);
        let mut data = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let p = product(x, y, z);
                    assert!(p < n, "product leaves the carrier");
                    data.push(p);
                }
            }
        }
        TernaryTable { labels, ids, data }
    }

    /// (xyz) = x y⁻¹ z for a group given by its Cayley table.
    pub fn from_group(cayley: &[Vec<usize>]) -> Self {
        let n = cayley.len();
        let unit = (0..n).find(|&e| (0..n).all(|g| cayley[e][g] == g)).expect("group has a unit");
        let inv: Vec<usize> = (0..n)
            .map(|g| (0..n).find(|&h| cayley[g][h] == unit).expect("group has inverses"))
            .collect();
        TernaryTable::from_fn((0..n).map(|i| i.to_string()).collect(), (0..n).collect(), |x, y, z| {
            cayley[cayley[x][inv[y]]][z]
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn local_index(&self, id: usize) -> Option<usize> {
        self.ids.iter().position(|&i| i == id)
    }

    #[inline]
    pub fn product(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.len();
        self.data[(x * n + y) * n + z]
    }

    /// Same carrier, (xyz) ↦ (zyx).
    pub fn opposite(&self) -> Self {
        let t = self;
        TernaryTable::from_fn(self.labels.clone(), self.ids.clone(), |x, y, z| t.product(z, y, x))
    }

    fn failure(&self, args: &[usize], expected: usize, actual: usize) -> Failure {
        Failure {
            tuple: args.iter().map(|&i| self.labels[i].clone()).collect(),
            expected: self.labels[expected].clone(),
            actual: self.labels[actual].clone(),
        }
    }

    fn compare(&self, args: &[usize], expected: usize, actual: usize) -> std::result::Result<(), Failure> {
        if expected == actual {
            Ok(())
        } else {
            Err(self.failure(args, expected, actual))
        }
    }

    pub fn is_torsor(&self) -> bool {
        check_torsor(self).iter().all(CheckReport::passed)
    }
}

/// (G1) (xy(zuv)) = ((xyz)uv) and (G2) (xxy) = y = (yxx), exhaustively.
pub fn check_torsor(t: &TernaryTable) -> Vec<CheckReport> {
    let n = t.len();
    let g1 = scan_tuples("G1", &[n; 5], u64::MAX, 0, |a| {
        let (x, y, z, u, v) = (a[0], a[1], a[2], a[3], a[4]);
        Some(t.compare(a, t.product(x, y, t.product(z, u, v)), t.product(t.product(x, y, z), u, v)))
    });
    let g2 = scan_tuples("G2", &[n; 2], u64::MAX, 0, |a| {
        let (x, y) = (a[0], a[1]);
        let ok = t.product(x, x, y) == y && t.product(y, x, x) == y;
        Some(if ok { Ok(()) } else { Err(t.failure(a, y, t.product(x, x, y))) })
    });
    vec![g1, g2]
}

/// Para-associativity ((xyz)uv) = (x(uzy)v) = (xy(zuv)), exhaustively.
pub fn check_semitorsor(t: &TernaryTable) -> CheckReport {
    let n = t.len();
    scan_tuples("G3", &[n; 5], u64::MAX, 0, |a| {
        let (x, y, z, u, v) = (a[0], a[1], a[2], a[3], a[4]);
        let right = t.product(x, y, t.product(z, u, v));
        let left = t.product(t.product(x, y, z), u, v);
        let middle = t.product(x, t.product(u, z, y), v);
        Some(t.compare(a, right, left).and_then(|_| t.compare(a, right, middle)))
    })
}

/// U_{ab}: the common complements of `a` and `b` with (xyz) = Γ(x,a,y,b,z).
/// Closure and the torsor laws are checked, not assumed.
pub fn torsor_on<F: FiniteField>(a: usize, b: usize, grass: &Grassmannian<F>, gamma: &impl Quintary) -> Result<TernaryTable> {
    let e = grass.elements();
    let ids: Vec<usize> = (0..grass.len())
        .filter(|&c| transversal(&e[c], &e[a]) && transversal(&e[c], &e[b]))
        .collect();
    let local: HashMap<usize, usize> = ids.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let n = ids.len();
    let mut data = Vec::with_capacity(n * n * n);
    for &x in &ids {
        for &y in &ids {
            for &z in &ids {
                let p = gamma.gamma(x, a, y, b, z);
                match local.get(&p) {
                    Some(&i) => data.push(i),
                    None => return Err(Error::ClosureViolation(vec![x, a, y, b, z])),
                }
            }
        }
    }
    let labels = ids.iter().map(|&i| e[i].to_literal()).collect();
    let t = TernaryTable { labels, ids, data };
    let reports = check_torsor(&t);
    if let Some(bad) = reports.iter().find(|c| !c.passed()) {
        return Err(Error::NotATorsor(format!("{} fails on {:?}", bad.axiom, bad.failures.first())));
    }
    Ok(t)
}

/// The whole Grassmannian under (xyz) = Γ(x,a,y,b,z) for fixed a, b.
pub fn semitorsor_on<F: FiniteField>(a: usize, b: usize, grass: &Grassmannian<F>, gamma: &impl Quintary) -> TernaryTable {
    let labels = grass.elements().iter().map(|s| s.to_literal()).collect();
    TernaryTable::from_fn(labels, (0..grass.len()).collect(), |x, y, z| gamma.gamma(x, a, y, b, z))
}

/// A torsor with a chosen unit: a ·_e b = (a e b), a⁻¹ = (e a e).
#[derive(Clone, Debug)]
pub struct GroupView {
    table: TernaryTable,
    unit: usize,
}

pub fn group_view(t: &TernaryTable, unit: usize) -> Result<GroupView> {
    if unit >= t.len() {
        return Err(Error::UnitNotInCarrier);
    }
    if let Some(bad) = check_torsor(t).into_iter().find(|c| !c.passed()) {
        return Err(Error::NotATorsor(bad.axiom));
    }
    Ok(GroupView { table: t.clone(), unit })
}

impl GroupView {
    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.product(a, self.unit, b)
    }

    pub fn inv(&self, a: usize) -> usize {
        self.table.product(self.unit, a, self.unit)
    }

    pub fn cayley(&self) -> Vec<Vec<usize>> {
        (0..self.len()).map(|a| (0..self.len()).map(|b| self.mul(a, b)).collect()).collect()
    }

    /// Associativity, unit, inverses, and (abc) = a b⁻¹ c.
    pub fn check_group_axioms(&self) -> Vec<CheckReport> {
        let n = self.len();
        let t = &self.table;
        let e = self.unit;
        let assoc = scan_tuples("associativity", &[n; 3], u64::MAX, 0, |g| {
            Some(t.compare(g, self.mul(self.mul(g[0], g[1]), g[2]), self.mul(g[0], self.mul(g[1], g[2]))))
        });
        let unit = scan_tuples("unit", &[n], u64::MAX, 0, |g| {
            let a = g[0];
            Some(t.compare(g, a, self.mul(a, e)).and_then(|_| t.compare(g, a, self.mul(e, a))))
        });
        let inverse = scan_tuples("inverse", &[n], u64::MAX, 0, |g| {
            let a = g[0];
            Some(t.compare(g, e, self.mul(a, self.inv(a))).and_then(|_| t.compare(g, e, self.mul(self.inv(a), a))))
        });
        let ternary = scan_tuples("ternary recovered", &[n; 3], u64::MAX, 0, |g| {
            let (a, b, c) = (g[0], g[1], g[2]);
            Some(t.compare(g, t.product(a, b, c), self.mul(self.mul(a, self.inv(b)), c)))
        });
        vec![assoc, unit, inverse, ternary]
    }

    /// A unit-preserving isomorphism onto the group with Cayley table
    /// `other` (unit at index `other_unit`), by search over bijections.
    pub fn isomorphism_to(&self, other: &[Vec<usize>], other_unit: usize) -> Option<Vec<usize>> {
        let n = self.len();
        if other.len() != n {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.unit] = other_unit;
        used[other_unit] = true;
        let order: Vec<usize> = (0..n).filter(|&g| g != self.unit).collect();
        let me = self.cayley();
        fn rec(k: usize, order: &[usize], map: &mut Vec<usize>, used: &mut Vec<bool>, me: &[Vec<usize>], other: &[Vec<usize>]) -> bool {
            if k == order.len() {
                return (0..map.len()).all(|a| (0..map.len()).all(|b| map[me[a][b]] == other[map[a]][map[b]]));
            }
            let g = order[k];
            for target in 0..map.len() {
                if used[target] {
                    continue;
                }
                map[g] = target;
                used[target] = true;
                if rec(k + 1, order, map, used, me, other) {
                    return true;
                }
                used[target] = false;
            }
            map[g] = usize::MAX;
            false
        }
        rec(0, &order, &mut map, &mut used, &me, other).then_some(map)
    }
}

/// Cayley table of ℤ/n.
pub fn cyclic_group(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Cayley table of (𝕂, +), indexed by `field.element`.
pub fn additive_group<F: FiniteField>(field: &F) -> Vec<Vec<usize>> {
    let q = field.order();
    (0..q)
        .map(|a| (0..q).map(|b| field.index_of(field.add(field.element(a), field.element(b)))).collect())
        .collect()
}

/// m(x, y) = (xyx) as an n×n table.
pub fn symmetric_diagonal(t: &TernaryTable) -> Result<Vec<Vec<usize>>> {
    if !t.is_torsor() {
        return Err(Error::NotATorsor("symmetric diagonal needs a torsor".into()));
    }
    Ok((0..t.len()).map(|x| (0..t.len()).map(|y| t.product(x, y, x)).collect()).collect())
}

/// Identities valid in every torsor: Chasles relations, middle
/// multiplications as invertible anti-automorphisms, (m_{x,e})² as
/// conjugation, and the symmetric-diagonal involutions.
pub fn torsor_identities(t: &TernaryTable) -> Vec<CheckReport> {
    torsor_identities_with(t, u64::MAX, 0)
}

/// [`torsor_identities`] under a tuple budget.
pub fn torsor_identities_with(t: &TernaryTable, budget: u64, seed: u64) -> Vec<CheckReport> {
    let n = t.len();
    let p = |x, y, z| t.product(x, y, z);
    let mut out = Vec::new();
    out.push(scan_tuples("Chasles relation (left)", &[n; 4], budget, seed, |a| {
        let (x, y, u, z) = (a[0], a[1], a[2], a[3]);
        Some(t.compare(a, p(x, u, z), p(x, y, p(y, u, z))))
    }));
    out.push(scan_tuples("Chasles relation (right)", &[n; 4], budget, seed, |a| {
        let (x, y, u, z) = (a[0], a[1], a[2], a[3]);
        // r_{y,z} ∘ r_{u,y} = r_{u,z}
        Some(t.compare(a, p(x, u, z), p(p(x, u, y), y, z)))
    }));
    out.push(scan_tuples("middle multiplication is invertible", &[n; 3], budget, seed, |a| {
        let (x, z, y) = (a[0], a[1], a[2]);
        Some(t.compare(a, y, p(x, p(z, y, x), z)))
    }));
    out.push(scan_tuples("middle multiplication is an anti-automorphism", &[n; 5], budget, seed, |a| {
        let (x, z, u, v, w) = (a[0], a[1], a[2], a[3], a[4]);
        let m = |y| p(x, y, z);
        Some(t.compare(a, p(m(w), m(v), m(u)), m(p(u, v, w))))
    }));
    out.push(scan_tuples("(G3') m∘m = ℓ∘r", &[n; 5], budget, seed, |a| {
        let (x, z, u, w, y) = (a[0], a[1], a[2], a[3], a[4]);
        Some(t.compare(a, p(p(x, w, y), u, z), p(x, p(u, y, w), z)))
    }));
    out.push(scan_tuples("(m_{x,e})² is conjugation by x", &[n; 3], budget, seed, |a| {
        let (x, e, y) = (a[0], a[1], a[2]);
        let mul = |g, h| p(g, e, h);
        let inv_x = p(e, x, e);
        Some(t.compare(a, mul(mul(x, y), inv_x), p(x, p(x, y, e), e)))
    }));
    out.push(scan_tuples("σ_x is an involution fixing x", &[n; 2], budget, seed, |a| {
        let (x, y) = (a[0], a[1]);
        let s = |v| p(x, v, x);
        Some(t.compare(a, x, s(x)).and_then(|_| t.compare(a, y, s(s(y)))))
    }));
    out.push(scan_tuples("σ_x is inversion in (G, x)", &[n; 2], budget, seed, |a| {
        let (x, y) = (a[0], a[1]);
        // inverse of y in the group with unit x is (x y x)
        Some(t.compare(a, x, p(y, x, p(x, y, x))))
    }));
    out
}

pub(crate) fn lit<F: FiniteField>(grass: &Grassmannian<F>, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| grass.get(i).to_literal()).collect()
}

pub(crate) fn compare<F: FiniteField>(grass: &Grassmannian<F>, args: &[usize], expected: usize, actual: usize) -> std::result::Result<(), Failure> {
    if expected == actual {
        Ok(())
    } else {
        Err(Failure {
            tuple: lit(grass, args),
            expected: grass.get(expected).to_literal(),
            actual: grass.get(actual).to_literal(),
        })
    }
}

pub(crate) fn transversal_table<F: FiniteField>(grass: &Grassmannian<F>) -> Vec<Vec<bool>> {
    let e = grass.elements();
    e.iter().map(|x| e.iter().map(|a| transversal(x, a)).collect()).collect()
}

/// The left and right actions of (U_{ab}, y) on the whole Grassmannian.
pub fn action_check<F: FiniteField>(a: usize, y: usize, b: usize, grass: &Grassmannian<F>, gamma: &impl Quintary) -> Vec<CheckReport> {
    action_check_with(a, y, b, grass, gamma, &transversal_table(grass), u64::MAX, 0)
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn action_check_with<F: FiniteField>(
    a: usize,
    y: usize,
    b: usize,
    grass: &Grassmannian<F>,
    gamma: &impl Quintary,
    tr: &[Vec<bool>],
    budget: u64,
    seed: u64,
) -> Vec<CheckReport> {
    assert!(tr[y][a] && tr[y][b], "unit must lie in C_ab");
    let n = grass.len();
    let c: Vec<usize> = (0..n).filter(|&x| tr[x][a] && tr[x][b]).collect();
    let m = c.len();
    let g = |x, z| gamma.gamma(x, a, y, b, z);
    let label = |s: &str| format!("{s} (a,y,b)=({a},{y},{b})");
    vec![
        scan_tuples(&label("left action is a homomorphism"), &[m, m, n], budget, seed, |t| {
            let (x, x2, z) = (c[t[0]], c[t[1]], t[2]);
            Some(compare(grass, &[x, x2, z], g(g(x, x2), z), g(x, g(x2, z))))
        }),
        scan_tuples(&label("left unit acts trivially"), &[n], budget, seed, |t| Some(compare(grass, t, t[0], g(y, t[0])))),
        scan_tuples(&label("right action is a homomorphism"), &[n, m, m], budget, seed, |t| {
            let (x, z, z2) = (t[0], c[t[1]], c[t[2]]);
            Some(compare(grass, &[x, z, z2], g(x, g(z, z2)), g(g(x, z), z2)))
        }),
        scan_tuples(&label("right unit acts trivially"), &[n], budget, seed, |t| Some(compare(grass, t, t[0], g(t[0], y)))),
        scan_tuples(&label("left and right actions commute"), &[m, n, m], budget, seed, |t| {
            let (x, w, z) = (c[t[0]], t[1], c[t[2]]);
            Some(compare(grass, &[x, w, z], g(g(x, w), z), g(x, g(w, z))))
        }),
        scan_tuples(&label("a and b are fixed"), &[m], budget, seed, |t| {
            let x = c[t[0]];
            Some(
                compare(grass, &[x], a, g(x, a))
                    .and_then(|_| compare(grass, &[x], b, g(x, b)))
                    .and_then(|_| compare(grass, &[x], a, g(a, x)))
                    .and_then(|_| compare(grass, &[x], b, g(b, x))),
            )
        }),
    ]
}

/// Π tables for every scalar of the field, indexed by `field.index_of`.
pub fn pi_tables<F: FiniteField>(grass: &Grassmannian<F>) -> Vec<PiTable> {
    let f = grass.space().field();
    (0..f.order()).map(|i| PiTable::build(grass, f.element(i))).collect()
}

/// C_a as an affine space: for each origin o, x +_o z = Γ(x,a,o,a,z) and
/// r ·_o x = Π_r(o,a,x) make C_a a 𝕂-vector space with zero o, and
/// Π_r(x,a,y) = (1−r)·_o x +_o r·_o y for every origin.
pub fn affine_space_check<F: FiniteField>(a: usize, grass: &Grassmannian<F>, gamma: &impl Quintary, pis: &[PiTable]) -> Vec<CheckReport> {
    affine_space_check_with(a, grass, gamma, pis, &transversal_table(grass), u64::MAX, 0)
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn affine_space_check_with<F: FiniteField>(
    a: usize,
    grass: &Grassmannian<F>,
    gamma: &impl Quintary,
    pis: &[PiTable],
    tr: &[Vec<bool>],
    budget: u64,
    seed: u64,
) -> Vec<CheckReport> {
    let f = grass.space().field();
    let q = f.order();
    assert_eq!(pis.len(), q, "one Π table per scalar");
    let c: Vec<usize> = (0..grass.len()).filter(|&x| tr[x][a]).collect();
    let m = c.len();
    let add = |o, x, z| gamma.gamma(x, a, o, a, z);
    let smul = |o, r: usize, x| pis[r].pi(o, a, x);
    let ri = |r| f.index_of(r);
    let el = |i| f.element(i);
    let (zero, one) = (ri(f.zero()), ri(f.one()));
    let label = |s: &str| format!("{s} (a={a})");
    let in_c = |v: usize| tr[v][a];
    let stable = |args: &[usize], v: usize| -> std::result::Result<(), Failure> {
        if in_c(v) {
            Ok(())
        } else {
            Err(Failure {
                tuple: lit(grass, args),
                expected: "an element of C_a".into(),
                actual: grass.get(v).to_literal(),
            })
        }
    };
    vec![
        scan_tuples(&label("C_a is stable"), &[m, m, m, q], budget, seed, |t| {
            let (o, x, z, r) = (c[t[0]], c[t[1]], c[t[2]], t[3]);
            Some(stable(&[o, x, z], add(o, x, z)).and_then(|_| stable(&[o, x], smul(o, r, x))))
        }),
        scan_tuples(&label("addition is an abelian group with zero o"), &[m, m, m, m], budget, seed, |t| {
            let (o, x, y, z) = (c[t[0]], c[t[1]], c[t[2]], c[t[3]]);
            let args = [o, x, y, z];
            let has_neg = c.iter().any(|&w| add(o, x, w) == o);
            Some(
                compare(grass, &args, add(o, x, y), add(o, y, x))
                    .and_then(|_| compare(grass, &args, add(o, add(o, x, y), z), add(o, x, add(o, y, z))))
                    .and_then(|_| compare(grass, &args, x, add(o, o, x)))
                    .and_then(|_| if has_neg { Ok(()) } else { Err(Failure { tuple: lit(grass, &args), expected: "a negative".into(), actual: "none".into() }) }),
            )
        }),
        scan_tuples(&label("scalar action laws"), &[m, m, m, q, q], budget, seed, |t| {
            let (o, x, y, r, s) = (c[t[0]], c[t[1]], c[t[2]], t[3], t[4]);
            let args = [o, x, y];
            let rs = ri(f.mul(el(r), el(s)));
            let rps = ri(f.add(el(r), el(s)));
            Some(
                compare(grass, &args, x, smul(o, one, x))
                    .and_then(|_| compare(grass, &args, o, smul(o, zero, x)))
                    .and_then(|_| compare(grass, &args, smul(o, rs, x), smul(o, r, smul(o, s, x))))
                    .and_then(|_| compare(grass, &args, add(o, smul(o, r, x), smul(o, s, x)), smul(o, rps, x)))
                    .and_then(|_| compare(grass, &args, add(o, smul(o, r, x), smul(o, r, y)), smul(o, r, add(o, x, y)))),
            )
        }),
        scan_tuples(&label("Π_r is the affine combination"), &[m, m, m, q], budget, seed, |t| {
            let (o, x, y, r) = (c[t[0]], c[t[1]], c[t[2]], t[3]);
            let one_minus_r = ri(f.sub(f.one(), el(r)));
            let expected = add(o, smul(o, one_minus_r, x), smul(o, r, y));
            Some(compare(grass, &[o, x, y], expected, pis[r].pi(x, a, y)))
        }),
        scan_tuples(&label("x +_y z = x - y + z is origin independent"), &[m, m, m, m], budget, seed, |t| {
            let (o, x, y, z) = (c[t[0]], c[t[1]], c[t[2]], c[t[3]]);
            // x - y + z computed at origin o
            let minus_y = c.iter().copied().find(|&w| add(o, y, w) == o).unwrap_or(o);
            Some(compare(grass, &[o, x, y, z], add(o, add(o, x, minus_y), z), add(y, x, z)))
        }),
    ]
}

/// Which structural family a check is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartialMap {
    /// (L_{xayb}, L_{yaxb}), acting on the fifth slot.
    Left,
    /// (M_{xabz}, M_{zabx}), acting on the third slot.
    Middle,
    /// (R_{aybz}, R_{azby}), acting on the first slot.
    Right,
}

impl PartialMap {
    pub const ALL: [PartialMap; 3] = [PartialMap::Left, PartialMap::Middle, PartialMap::Right];

    fn name(self) -> &'static str {
        match self {
            PartialMap::Left => "(L_xayb, L_yaxb)",
            PartialMap::Middle => "(M_xabz, M_zabx)",
            PartialMap::Right => "(R_aybz, R_azby)",
        }
    }

    /// (f(w), g(w)) for parameters p = [p0, p1, p2, p3] read as
    /// (x,a,y,b), (x,a,b,z) or (a,y,b,z).
    pub fn apply(self, gamma: &impl Quintary, p: &[usize], w: usize) -> (usize, usize) {
        match self {
            PartialMap::Left => {
                let (x, a, y, b) = (p[0], p[1], p[2], p[3]);
                (gamma.gamma(x, a, y, b, w), gamma.gamma(y, a, x, b, w))
            }
            PartialMap::Middle => {
                let (x, a, b, z) = (p[0], p[1], p[2], p[3]);
                (gamma.gamma(x, a, w, b, z), gamma.gamma(z, a, w, b, x))
            }
            PartialMap::Right => {
                let (a, y, b, z) = (p[0], p[1], p[2], p[3]);
                (gamma.gamma(w, a, y, b, z), gamma.gamma(w, a, z, b, y))
            }
        }
    }
}

/// Structurality of one family of partial maps with respect to Γ, over
/// the 4 parameters and 5 variables together.
pub fn structural_family_check<F: FiniteField>(
    family: PartialMap,
    grass: &Grassmannian<F>,
    gamma: &impl Quintary,
    budget: u64,
    seed: u64,
) -> Vec<CheckReport> {
    let n = grass.len();
    let side = |forward: bool| {
        let name = format!("{} structural, {} side", family.name(), if forward { "f" } else { "g" });
        scan_tuples(&name, &[n; 9], budget, seed, |t| {
            let p = &t[0..4];
            let (x, a, y, b, z) = (t[4], t[5], t[6], t[7], t[8]);
            let (fo, go) = (|w| family.apply(gamma, p, w).0, |w| family.apply(gamma, p, w).1);
            let (h, k): (&dyn Fn(usize) -> usize, &dyn Fn(usize) -> usize) = if forward { (&fo, &go) } else { (&go, &fo) };
            let lhs = h(gamma.gamma(x, k(a), y, k(b), z));
            let rhs = gamma.gamma(h(x), a, h(y), b, h(z));
            Some(compare(grass, t, rhs, lhs))
        })
    };
    vec![side(true), side(false)]
}

/// Structurality of one family with respect to Π_r:
/// f Π_r(x, g u, z) = Π_r(f x, u, f z) and the mirror.
pub fn structural_family_pi_check<F: FiniteField>(
    family: PartialMap,
    r_label: &str,
    grass: &Grassmannian<F>,
    gamma: &impl Quintary,
    pi: &PiTable,
    budget: u64,
    seed: u64,
) -> Vec<CheckReport> {
    let n = grass.len();
    let side = |forward: bool| {
        let name = format!("{} Π_{r_label}-structural, {} side", family.name(), if forward { "f" } else { "g" });
        scan_tuples(&name, &[n; 7], budget, seed, |t| {
            let p = &t[0..4];
            let (x, u, z) = (t[4], t[5], t[6]);
            let (fo, go) = (|w| family.apply(gamma, p, w).0, |w| family.apply(gamma, p, w).1);
            let (h, k): (&dyn Fn(usize) -> usize, &dyn Fn(usize) -> usize) = if forward { (&fo, &go) } else { (&go, &fo) };
            let lhs = h(pi.pi(x, k(u), z));
            let rhs = pi.pi(h(x), u, h(z));
            Some(compare(grass, t, rhs, lhs))
        })
    };
    vec![side(true), side(false)]
}

/// Axioms (1)–(6) of an associative geometry, the operator forms of the
/// semitorsor law, and the operator inverse identities, on `grass`.
/// `pis` holds one Π table per scalar (see [`pi_tables`]).
pub fn verify_geometry_axioms<F: FiniteField>(
    grass: &Grassmannian<F>,
    gamma: &impl Quintary,
    pis: &[PiTable],
    budget: u64,
    seed: u64,
) -> Vec<CheckReport> {
    let f = grass.space().field();
    let n = grass.len();
    let e = grass.elements();
    let tr = transversal_table(grass);
    let g = |x, a, y, b, z| gamma.gamma(x, a, y, b, z);
    let cmp = |args: &[usize], exp: usize, act: usize| compare(grass, args, exp, act);
    let meet_t: Vec<Vec<usize>> = e.iter().map(|x| e.iter().map(|y| grass.expect_index(&meet(x, y))).collect()).collect();
    let join_t: Vec<Vec<usize>> = e.iter().map(|x| e.iter().map(|y| grass.expect_index(&join(x, y))).collect()).collect();
    let mut out = Vec::new();

    out.push(scan_tuples("(1) semitorsor property", &[n; 7], budget, seed, |t| {
        let (x, y, z, u, v, a, b) = (t[0], t[1], t[2], t[3], t[4], t[5], t[6]);
        let left = g(g(x, a, y, b, z), a, u, b, v);
        let middle = g(x, a, g(u, a, z, b, y), b, v);
        let right = g(x, a, y, b, g(z, a, u, b, v));
        Some(cmp(t, left, middle).and_then(|_| cmp(t, left, right)))
    }));
    out.push(scan_tuples("(2) Klein 4-group invariance", &[n; 5], budget, seed, |t| {
        let (x, a, y, b, z) = (t[0], t[1], t[2], t[3], t[4]);
        let v = g(x, a, y, b, z);
        Some(cmp(t, v, g(z, b, y, a, x)).and_then(|_| cmp(t, v, g(a, x, y, z, b))))
    }));
    for family in PartialMap::ALL {
        out.extend(structural_family_check(family, grass, gamma, budget, seed));
        for (i, pi) in pis.iter().enumerate() {
            out.extend(structural_family_pi_check(family, &f.format(f.element(i)), grass, gamma, pi, budget, seed));
        }
    }
    out.push(scan_tuples("(4)(i) Γ(a,a,y,b,b) = a ∨ b", &[n; 3], budget, seed, |t| {
        let (a, y, b) = (t[0], t[1], t[2]);
        Some(cmp(t, join_t[a][b], g(a, a, y, b, b)))
    }));
    out.push(scan_tuples("(4)(ii) Γ(a,b,y,a,b) = a ∧ b", &[n; 3], budget, seed, |t| {
        let (a, y, b) = (t[0], t[1], t[2]);
        Some(cmp(t, meet_t[a][b], g(a, b, y, a, b)))
    }));
    out.push(scan_tuples("(4)(iii) Γ(x,a,x,b,z) = z = Γ(z,b,x,a,x) on C_ab", &[n; 4], budget, seed, |t| {
        let (x, a, b, z) = (t[0], t[1], t[2], t[3]);
        if !(tr[x][a] && tr[x][b]) {
            return None;
        }
        Some(cmp(t, z, g(x, a, x, b, z)).and_then(|_| cmp(t, z, g(z, b, x, a, x))))
    }));
    out.push(scan_tuples("(4)(iv) Γ(x,a,y,b,b) = b if a⊤x, y⊤b", &[n; 4], budget, seed, |t| {
        let (x, a, y, b) = (t[0], t[1], t[2], t[3]);
        if !(tr[a][x] && tr[y][b]) {
            return None;
        }
        Some(cmp(t, b, g(x, a, y, b, b)))
    }));
    out.push(scan_tuples("(4)(v) Γ(x,a,y,b,a) = a if a⊤y, b⊤x", &[n; 4], budget, seed, |t| {
        let (x, a, y, b) = (t[0], t[1], t[2], t[3]);
        if !(tr[a][y] && tr[b][x]) {
            return None;
        }
        Some(cmp(t, a, g(x, a, y, b, a)))
    }));
    for a in 0..n {
        for mut c in affine_space_check(a, grass, gamma, pis) {
            c.axiom = format!("(5) {}", c.axiom);
            out.push(c);
        }
    }
    out.push(scan_tuples("(6) semitorsored pairs", &[n; 5], budget, seed, |t| {
        let (x, a, y, b, z) = (t[0], t[1], t[2], t[3], t[4]);
        // Γ(U_a, a, U_b, b, U_a) ⊂ U_a and Γ(U_b, a, U_a, b, U_b) ⊂ U_b
        let first = tr[x][a] && tr[y][b] && tr[z][a];
        let second = tr[x][b] && tr[y][a] && tr[z][b];
        if !first && !second {
            return None;
        }
        let v = g(x, a, y, b, z);
        let ok = (!first || tr[v][a]) && (!second || tr[v][b]);
        Some(if ok {
            Ok(())
        } else {
            Err(Failure { tuple: lit(grass, t), expected: "stays in the semitorsored pair".into(), actual: grass.get(v).to_literal() })
        })
    }));
    out.extend(operator_forms_check(grass, gamma, budget, seed));
    out.extend(operator_inverse_check(grass, gamma, budget, seed));
    out
}

/// The semitorsor law rewritten as identities between partial maps.
pub fn operator_forms_check<F: FiniteField>(grass: &Grassmannian<F>, gamma: &impl Quintary, budget: u64, seed: u64) -> Vec<CheckReport> {
    let n = grass.len();
    let g = |x, a, y, b, z| gamma.gamma(x, a, y, b, z);
    let cmp = |args: &[usize], exp: usize, act: usize| compare(grass, args, exp, act);
    vec![
        // R_{aubv} L_{xayb} = M_{xabv} M_{uaby} = L_{xayb} R_{aubv}
        scan_tuples("R L = M M = L R", &[n; 7], budget, seed, |t| {
            let (x, a, y, b, u, v, w) = (t[0], t[1], t[2], t[3], t[4], t[5], t[6]);
            let rl = g(g(x, a, y, b, w), a, u, b, v);
            let mm = g(x, a, g(u, a, w, b, y), b, v);
            let lr = g(x, a, y, b, g(w, a, u, b, v));
            Some(cmp(t, rl, mm).and_then(|_| cmp(t, rl, lr)))
        }),
        // L_{xayb} L_{zaub} = L_{x,a,L_{ybza}(u),b} = L_{L_{xayb}(z),a,u,b}
        scan_tuples("L L = L_{x,a,L(u),b} = L_{L(z),a,u,b}", &[n; 7], budget, seed, |t| {
            let (x, a, y, b, z, u, w) = (t[0], t[1], t[2], t[3], t[4], t[5], t[6]);
            let ll = g(x, a, y, b, g(z, a, u, b, w));
            let inner = g(x, a, g(u, a, z, b, y), b, w);
            let outer = g(g(x, a, y, b, z), a, u, b, w);
            Some(cmp(t, ll, inner).and_then(|_| cmp(t, ll, outer)))
        }),
        // M_{Γ(x,a,y,b,z),a,b,v} = M_{xabv} L_{ybza} = L_{xayb} M_{zabv}
        scan_tuples("M_{Γ(x,a,y,b,z),a,b,v} = M L = L M", &[n; 7], budget, seed, |t| {
            let (x, a, y, b, z, v, w) = (t[0], t[1], t[2], t[3], t[4], t[5], t[6]);
            let m = g(g(x, a, y, b, z), a, w, b, v);
            let ml = g(x, a, g(y, b, z, a, w), b, v);
            let lm = g(x, a, y, b, g(z, a, w, b, v));
            Some(cmp(t, m, ml).and_then(|_| cmp(t, m, lm)))
        }),
    ]
}

/// (L_{xayb})⁻¹ = L_{yaxb}, (R_{aybx})⁻¹ = R_{axby}, (M_{xabz})⁻¹ = M_{zabx}
/// on the whole Grassmannian, for x, y, z ∈ C_ab.
pub fn operator_inverse_check<F: FiniteField>(grass: &Grassmannian<F>, gamma: &impl Quintary, budget: u64, seed: u64) -> Vec<CheckReport> {
    let n = grass.len();
    let tr = transversal_table(grass);
    let g = |x, a, y, b, z| gamma.gamma(x, a, y, b, z);
    let cmp = |args: &[usize], exp: usize, act: usize| compare(grass, args, exp, act);
    let inside = |a: usize, b: usize, s: &[usize]| s.iter().all(|&v| tr[v][a] && tr[v][b]);
    vec![
        scan_tuples("L_yaxb L_xayb = id", &[n; 5], budget, seed, |t| {
            let (x, a, y, b, w) = (t[0], t[1], t[2], t[3], t[4]);
            inside(a, b, &[x, y]).then(|| cmp(t, w, g(y, a, x, b, g(x, a, y, b, w))))
        }),
        scan_tuples("R_axby R_aybx = id", &[n; 5], budget, seed, |t| {
            let (x, a, y, b, w) = (t[0], t[1], t[2], t[3], t[4]);
            inside(a, b, &[x, y]).then(|| cmp(t, w, g(g(w, a, y, b, x), a, x, b, y)))
        }),
        scan_tuples("M_zabx M_xabz = id", &[n; 5], budget, seed, |t| {
            let (x, a, z, b, w) = (t[0], t[1], t[2], t[3], t[4]);
            inside(a, b, &[x, z]).then(|| cmp(t, w, g(z, a, g(x, a, w, b, z), b, x)))
        }),
    ]
}

/// Summarizes a list of checks into pass/fail and mode.
pub fn all_passed(checks: &[CheckReport]) -> bool {
    checks.iter().all(CheckReport::passed)
}

pub fn overall_mode(checks: &[CheckReport]) -> Mode {
    if checks.iter().all(|c| c.mode == Mode::Exhaustive) {
        Mode::Exhaustive
    } else {
        Mode::Sampled
    }
}
