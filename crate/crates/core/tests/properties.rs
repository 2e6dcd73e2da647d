use assocgeo::exactla::{Field, Matrix, PrimeField};
use assocgeo::gamma::{gamma_extended, gamma_operator_route, pi_extended};
use assocgeo::modspace::{join, meet, transversal, ModuleSpace, Subspace};
use assocgeo::relations::LinearRelation;
use assocgeo::Error;
use proptest::prelude::*;

const DIM: usize = 3;

fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// Span of up to DIM random rows over GF(p).
fn subspace(p: u32) -> impl Strategy<Value = Subspace<PrimeField>> {
    (0..=DIM).prop_flat_map(move |rows| {
        proptest::collection::vec(0..p, rows * DIM).prop_map(move |data| {
            if rows == 0 {
                return Subspace::zero(&gf(p), DIM);
            }
            Subspace::span_of(&Matrix::from_vec(&gf(p), rows, DIM, data).unwrap())
        })
    })
}

fn five(p: u32) -> impl Strategy<Value = [Subspace<PrimeField>; 5]> {
    [subspace(p), subspace(p), subspace(p), subspace(p), subspace(p)]
}

fn relation(p: u32, src: usize, tgt: usize) -> impl Strategy<Value = LinearRelation<PrimeField>> {
    let n = src + tgt;
    (0..=n).prop_flat_map(move |rows| {
        proptest::collection::vec(0..p, rows * n).prop_map(move |data| {
            let f = gf(p);
            let graph = if rows == 0 { Subspace::zero(&f, n) } else { Subspace::span_of(&Matrix::from_vec(&f, rows, n, data).unwrap()) };
            LinearRelation::new(ModuleSpace::vector_space(f.clone(), src), ModuleSpace::vector_space(f, tgt), graph).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn lattice_laws(x in subspace(3), y in subspace(3), z in subspace(3)) {
        prop_assert_eq!(join(&x, &meet(&x, &y)), x.clone());
        prop_assert_eq!(meet(&x, &join(&x, &y)), x.clone());
        prop_assert_eq!(meet(&x, &y), meet(&y, &x));
        prop_assert_eq!(join(&join(&x, &y), &z), join(&x, &join(&y, &z)));
        prop_assert_eq!(meet(&x, &y).dim() + join(&x, &y).dim(), x.dim() + y.dim());
    }

    #[test]
    fn modular_law(x in subspace(2), a in subspace(2), z in subspace(2)) {
        let zx = meet(&z, &x);
        prop_assert_eq!(join(&zx, &meet(&a, &x)), meet(&join(&zx, &a), &x));
    }

    #[test]
    fn klein_symmetry(t in five(3)) {
        let [x, a, y, b, z] = &t;
        let g = gamma_extended(x, a, y, b, z);
        prop_assert_eq!(&g, &gamma_extended(z, b, y, a, x));
        prop_assert_eq!(&g, &gamma_extended(a, x, y, z, b));
    }

    #[test]
    fn diagonal_x_equals_y(x in subspace(5), a in subspace(5), b in subspace(5), z in subspace(5)) {
        let expected = meet(&join(&z, &meet(&x, &a)), &join(&b, &x));
        prop_assert_eq!(gamma_extended(&x, &a, &x, &b, &z), expected);
    }

    #[test]
    fn operator_route_agrees_or_reports_domain(t in five(2)) {
        let [x, a, y, b, z] = &t;
        let universe = assocgeo::oracle::enumerate_subspaces(&ModuleSpace::vector_space(gf(2), DIM)).unwrap();
        match gamma_operator_route(x, a, y, b, z, &universe) {
            Ok(v) => prop_assert_eq!(v, gamma_extended(x, a, y, b, z)),
            Err(Error::OutsideDomain) => {
                let in_dl = transversal(x, a) && transversal(y, b);
                let in_dr = transversal(y, a) && transversal(z, b);
                prop_assert!(!in_dl && !in_dr);
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn pi_symmetry_and_diagonal(r in 0u32..5, x in subspace(5), a in subspace(5), z in subspace(5)) {
        let f = gf(5);
        let s = f.sub(f.one(), r);
        prop_assert_eq!(pi_extended(r, &x, &a, &z), pi_extended(s, &z, &a, &x));
        prop_assert_eq!(pi_extended(r, &x, &a, &x), x.clone());
        prop_assert_eq!(pi_extended(f.zero(), &x, &a, &z), meet(&x, &join(&z, &a)));
    }

    #[test]
    fn relation_composition(r in relation(3, 2, 1), s in relation(3, 1, 2), t in relation(3, 2, 2)) {
        let left = LinearRelation::compose(&LinearRelation::compose(&t, &s).unwrap(), &r).unwrap();
        let right = LinearRelation::compose(&t, &LinearRelation::compose(&s, &r).unwrap()).unwrap();
        prop_assert_eq!(left.graph(), right.graph());
        let rev = LinearRelation::compose(&s, &r).unwrap().reverse();
        let rev2 = LinearRelation::compose(&r.reverse(), &s.reverse()).unwrap();
        prop_assert_eq!(rev.graph(), rev2.graph());
        let back = r.reverse().reverse();
        prop_assert_eq!(back.graph(), r.graph());
    }

    #[test]
    fn relation_pushforward_composes(r in relation(3, 2, 2), s in relation(3, 2, 2), x in subspace_n(3, 2)) {
        let rs = LinearRelation::compose(&s, &r).unwrap();
        prop_assert_eq!(rs.pushforward(&x).unwrap(), s.pushforward(&r.pushforward(&x).unwrap()).unwrap());
    }
}

fn subspace_n(p: u32, n: usize) -> impl Strategy<Value = Subspace<PrimeField>> {
    (0..=n).prop_flat_map(move |rows| {
        proptest::collection::vec(0..p, rows * n).prop_map(move |data| {
            if rows == 0 {
                return Subspace::zero(&gf(p), n);
            }
            Subspace::span_of(&Matrix::from_vec(&gf(p), rows, n, data).unwrap())
        })
    })
}
