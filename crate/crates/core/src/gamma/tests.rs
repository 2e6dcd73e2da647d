use super::*;
use crate::exactla::{Matrix, PrimeField};
use crate::modspace::ModuleSpace;

fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn sub(w: &ModuleSpace<PrimeField>, rows: &[&[i64]]) -> Subspace<PrimeField> {
    w.subspace_from_ints(rows).unwrap()
}

/// All lines and the two trivial subspaces of GF(p)².
fn plane(p: u32) -> (ModuleSpace<PrimeField>, Vec<Subspace<PrimeField>>) {
    let w = ModuleSpace::vector_space(gf(p), 2);
    let mut u = vec![w.zero(), w.full(), sub(&w, &[&[0, 1]])];
    for s in 0..p as i64 {
        u.push(sub(&w, &[&[1, s]]));
    }
    (w, u)
}

#[test]
fn projector_examples() {
    let f = gf(3);
    let w = ModuleSpace::vector_space(f, 2);
    let x = sub(&w, &[&[1, 0]]);
    let a = sub(&w, &[&[0, 1]]);
    assert_eq!(projector(&x, &a).unwrap(), Matrix::from_ints(&f, &[&[1, 0], &[0, 0]]));
    let x = sub(&w, &[&[1, 1]]);
    let p = projector(&x, &a).unwrap();
    assert_eq!(p, Matrix::from_ints(&f, &[&[1, 0], &[1, 0]]));
    let q = projector(&a, &x).unwrap();
    assert!((&p + &q).is_identity());
    assert!((&p * &p) == p);
    assert_eq!(projector(&x, &x), Err(Error::NotTransversal { first: "x", second: "a" }));
}

#[test]
fn operator_examples() {
    let (_, u) = plane(3);
    let f = gf(3);
    let (x, a, b) = (&u[3], &u[2], &u[4]);
    let minus_one = f.neg(f.one());
    assert_eq!(m_operator(x, a, a, x).unwrap(), delta_operator(minus_one, x, a).unwrap());
    let c = &u[5];
    // c is a common complement of a and b
    assert!(in_common_complement(c, a, b));
    assert!(l_operator(c, a, c, b).unwrap().is_identity());
    assert!(r_operator(a, c, b, c).unwrap().is_identity());
    let p = ProjOperator::new(projector(x, a).unwrap());
    assert_eq!(delta_operator(f.zero(), x, a).unwrap(), p);
    assert!(delta_operator(f.one(), x, a).unwrap().is_identity());
    assert!(matches!(
        l_operator(x, x, c, b),
        Err(Error::NotTransversal { first: "x", second: "a" })
    ));
}

#[test]
fn domain_examples() {
    let (w, u) = plane(2);
    let x = sub(&w, &[&[1, 1]]);
    let a = sub(&w, &[&[0, 1]]);
    let y = sub(&w, &[&[1, 0]]);
    // y = b rules out D_L; D_R then hinges on z ⊤ b
    let flags = classify_domain(&x, &a, &y, &y, &u[0], &u);
    assert!(!flags.in_dl);
    assert!(!flags.in_dr);
    assert!(!flags.in_dm);
    let flags = classify_domain(&x, &a, &y, &y, &a, &u);
    assert!(!flags.in_dl && flags.in_dr && flags.in_dm);
    let flags = classify_domain(&x, &x, &y, &a, &u[0], &u);
    assert!(!flags.in_dl && !flags.in_dm);
    let b = sub(&w, &[&[1, 0]]);
    let flags = classify_domain(&x, &a, &x, &b, &x, &u);
    assert!(flags.in_dl && flags.in_dr && flags.in_dm);
}

#[test]
fn operator_route_examples() {
    let (w, u) = plane(3);
    let line = |s: i64| sub(&w, &[&[1, s]]);
    let a = sub(&w, &[&[0, 1]]);
    // affine torsor: slopes X − Y + Z
    assert_eq!(gamma_operator_route(&line(0), &a, &line(1), &a, &line(2), &u).unwrap(), line(1));
    // first kind: XY⁻¹Z
    let b = sub(&w, &[&[1, 0]]);
    assert_eq!(gamma_operator_route(&line(2), &a, &line(1), &b, &line(2), &u).unwrap(), line(1));
    for x in [line(1), line(2)] {
        for z in &u {
            assert_eq!(&gamma_operator_route(&x, &a, &x, &b, z, &u).unwrap(), z);
        }
    }
    assert_eq!(
        gamma_operator_route(&a, &a, &a, &a, &a, &u),
        Err(Error::OutsideDomain)
    );
}

#[test]
fn extended_examples() {
    let (w, u) = plane(3);
    for a in &u {
        for b in &u {
            for y in &u {
                assert_eq!(gamma_extended(a, a, y, b, b), w.join(a, b).unwrap());
                for x in &u {
                    assert_eq!(gamma_extended(x, a, y, x, a), w.meet(a, x).unwrap());
                }
            }
        }
    }
}

#[test]
fn bruteforce_examples() {
    let (w, u) = plane(3);
    for x in &u {
        for a in &u {
            for b in &u {
                assert_eq!(&gamma_bruteforce(x, a, x, b, x).unwrap(), x);
                for z in &u {
                    let expected = w.meet(&w.join(z, &w.meet(x, a).unwrap()).unwrap(), &w.join(b, x).unwrap()).unwrap();
                    assert_eq!(gamma_bruteforce(x, a, x, b, z).unwrap(), expected);
                }
            }
        }
    }
    let big = ModuleSpace::vector_space(gf(3), 7);
    assert!(matches!(
        gamma_bruteforce(&big.zero(), &big.zero(), &big.zero(), &big.zero(), &big.zero()),
        Err(Error::TooLarge(_))
    ));
}

#[test]
fn routes_agree_on_the_gf3_plane() {
    let (_, u) = plane(3);
    let s = ScanSpace::new(&gf(3), 2).unwrap();
    let ex: Vec<_> = u.iter().map(|v| s.expand(v)).collect();
    let n = u.len();
    for i in 0..n.pow(5) {
        let idx = [i % n, i / n % n, i / n / n % n, i / n.pow(3) % n, i / n.pow(4)];
        let t: Vec<_> = idx.iter().map(|&k| &u[k]).collect();
        let e = gamma_extended(t[0], t[1], t[2], t[3], t[4]);
        let bf = s.gamma(&ex[idx[0]], &ex[idx[1]], &ex[idx[2]], &ex[idx[3]], &ex[idx[4]]).unwrap();
        assert_eq!(e, bf, "{t:?}");
        let flags = classify_domain(t[0], t[1], t[2], t[3], t[4], &u);
        for v in gamma_operator_values(t[0], t[1], t[2], t[3], t[4], flags) {
            assert_eq!(v, e, "{t:?}");
        }
    }
}

#[test]
fn affine_examples() {
    let f = gf(3);
    let chart = AffineChart::new(&f, 1, 1);
    let m = |v: i64| Matrix::from_ints(&f, &[&[v]]);
    let zero = m(0);
    for x in 0..3 {
        for a in 0..3 {
            for z in 0..3 {
                let (xm, am, zm) = (m(x), m(a), m(z));
                if !quasi_inverse_check(&xm, &am).unwrap() {
                    assert_eq!(
                        chart.gamma(&xm, &am, &zero, &zero, &zm).map(|_| ()),
                        Err(Error::NotQuasiInvertible("X, A"))
                    );
                    continue;
                }
                let v = chart.gamma(&xm, &am, &zero, &zero, &zm).unwrap();
                assert_eq!(v.hom.unwrap(), m(x - z * a * x + z));
                for y in 0..3 {
                    if !quasi_inverse_check(&m(y), &am).unwrap() {
                        continue;
                    }
                    let v = chart.gamma(&xm, &am, &m(y), &zero, &zm).unwrap();
                    let ay = (&m(1) - &(&am * &m(y))).inverse().unwrap();
                    let expected = &m(x) - &(&(&(&m(y) - &zm) * &ay) * &(&m(1) - &(&am * &xm)));
                    assert_eq!(v.subspace, chart.plus_graph(&expected));
                }
            }
        }
    }
}

#[test]
fn affine_first_kind() {
    // W = o⁻ ⊕ o⁺; a = o⁺-graph of 0 is o⁻, b "infinity" is o⁺
    let f = gf(3);
    let chart = AffineChart::new(&f, 1, 1);
    let m = |v: i64| Matrix::from_ints(&f, &[&[v]]);
    let a = chart.o_minus();
    let b = chart.o_plus();
    for x in 0..3 {
        for y in 1..3 {
            for z in 0..3 {
                let xs = chart.plus_graph(&m(x));
                let ys = chart.plus_graph(&m(y));
                let zs = chart.plus_graph(&m(z));
                let yinv = m(y).inverse().unwrap();
                let expected = chart.plus_graph(&(&(&m(x) * &yinv) * &m(z)));
                assert_eq!(gamma_extended(&xs, &a, &ys, &b, &zs), expected);
            }
        }
    }
}

#[test]
fn chart_coordinates_roundtrip() {
    let f = gf(5);
    let chart = AffineChart::new(&f, 2, 1);
    let x = Matrix::from_ints(&f, &[&[3], &[4]]);
    assert_eq!(chart.plus_coordinate(&chart.plus_graph(&x)).unwrap(), x);
    let a = Matrix::from_ints(&f, &[&[2, 1]]);
    assert_eq!(chart.minus_coordinate(&chart.minus_graph(&a)).unwrap(), a);
    assert!(chart.plus_coordinate(&chart.o_minus()).is_none());
}

#[test]
fn quasi_inverse_examples() {
    let f2 = gf(2);
    let f3 = gf(3);
    let one = Matrix::from_ints(&f2, &[&[1]]);
    assert!(!quasi_inverse_check(&one, &one).unwrap());
    assert!(quasi_inverse_check(&Matrix::zeros(&f2, 1, 1), &one).unwrap());
    assert!(quasi_inverse_check(&Matrix::from_ints(&f3, &[&[1]]), &Matrix::from_ints(&f3, &[&[2]])).unwrap());
}

#[test]
fn pi_examples() {
    let (w, u) = plane(3);
    let f = gf(3);
    for r in 0..3 {
        for x in &u {
            for a in &u {
                assert_eq!(&pi_extended(r, x, a, x), x);
                for z in &u {
                    let e = pi_extended(r, x, a, z);
                    assert_eq!(e, pi_bruteforce(r, x, a, z).unwrap());
                    assert_eq!(e, pi_extended(f.sub(1, r), z, a, x));
                }
            }
        }
    }
    for x in &u {
        for a in &u {
            for z in &u {
                let expected = w.meet(x, &w.join(z, a).unwrap()).unwrap();
                assert_eq!(pi_extended(0, x, a, z), expected);
            }
        }
    }
    let a = sub(&w, &[&[0, 1]]);
    let slope = |s: i64| sub(&w, &[&[1, s]]);
    assert_eq!(pi_extended(2, &slope(0), &a, &slope(2)), slope(1));
}

#[test]
fn diagonal_cases_on_the_gf2_plane() {
    let (_, u) = plane(2);
    let n = u.len();
    for i in 0..n.pow(5) {
        let idx = [i % n, i / n % n, i / n / n % n, i / n.pow(3) % n, i / n.pow(4)];
        let t = [&u[idx[0]], &u[idx[1]], &u[idx[2]], &u[idx[3]], &u[idx[4]]];
        let e = gamma_extended(t[0], t[1], t[2], t[3], t[4]);
        for case in DiagonalCase::ALL {
            if case.matches(t) {
                assert_eq!(diagonal_gamma(case, t).unwrap(), e, "{case:?} {t:?}");
            } else {
                assert!(diagonal_gamma(case, t).is_err());
            }
        }
        for c in ConditionalValue::ALL {
            if let Some(v) = c.predict(t) {
                assert_eq!(v, e, "{c:?} {t:?}");
            }
        }
    }
}

#[test]
fn homogeneous_formulas_match() {
    // x, y, z as injections [X;1] and a, b as surjections (-A, 1) in the
    // ordering (o⁻, o⁺)
    let f = gf(3);
    let chart = AffineChart::new(&f, 1, 1);
    let col = |v: i64| Matrix::from_ints(&f, &[&[v], &[1]]);
    let row = |v: i64| Matrix::from_ints(&f, &[&[-v, 1]]);
    let span_cols = |m: &Matrix<PrimeField>| Subspace::span_of(&m.transpose());
    for x in 0..3 {
        for a in 0..3 {
            for y in 0..3 {
                for b in 0..3 {
                    for z in 0..3 {
                        let e = gamma_extended(
                            &chart.plus_graph(&Matrix::from_ints(&f, &[&[x]])),
                            &chart.minus_graph(&Matrix::from_ints(&f, &[&[a]])),
                            &chart.plus_graph(&Matrix::from_ints(&f, &[&[y]])),
                            &chart.minus_graph(&Matrix::from_ints(&f, &[&[b]])),
                            &chart.plus_graph(&Matrix::from_ints(&f, &[&[z]])),
                        );
                        let (xc, ar, yc, br, zc) = (col(x), row(a), col(y), row(b), col(z));
                        if let Ok(m) = homogeneous::middle(&xc, &ar, &yc, &br, &zc) {
                            assert_eq!(span_cols(&m), e);
                        }
                        if let Ok(m) = homogeneous::left(&xc, &ar, &yc, &br, &zc) {
                            assert_eq!(span_cols(&m), e);
                        }
                        if let Ok(m) = homogeneous::right(&xc, &ar, &yc, &br, &zc) {
                            assert_eq!(span_cols(&m), e);
                        }
                    }
                }
            }
        }
    }
}
