use assocgeo::exactla::PrimeField;
use assocgeo::modspace::ModuleSpace;
use assocgeo::oracle::enumerate_subspaces;
use assocgeo::relations::LinearRelation;

#[test]
fn relation_ternary_is_para_associative() {
    let f = PrimeField::new(2).unwrap();
    let (u, v) = (ModuleSpace::vector_space(f.clone(), 1), ModuleSpace::vector_space(f.clone(), 2));
    let graphs = enumerate_subspaces(&ModuleSpace::vector_space(f, 3)).unwrap();
    assert_eq!(graphs.len(), 16);
    let rels: Vec<_> = graphs.iter().map(|g| LinearRelation::new(u.clone(), v.clone(), g.clone()).unwrap()).collect();
    let index = |r: &LinearRelation<PrimeField>| graphs.iter().position(|g| g == r.graph()).unwrap();
    let n = rels.len();
    let mut table = vec![0usize; n * n * n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                table[(x * n + y) * n + z] = index(&LinearRelation::ternary(&rels[x], &rels[y], &rels[z]).unwrap());
            }
        }
    }
    let t = |x: usize, y: usize, z: usize| table[(x * n + y) * n + z];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for a in 0..n {
                    for b in 0..n {
                        let first = t(x, y, t(z, a, b));
                        assert_eq!(first, t(x, t(a, z, y), b), "{x} {y} {z} {a} {b}");
                        assert_eq!(first, t(t(x, y, z), a, b), "{x} {y} {z} {a} {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn ternary_of_graph_is_the_group_product() {
    let f = PrimeField::new(3).unwrap();
    let w = ModuleSpace::vector_space(f.clone(), 1);
    let g = |c: i64| LinearRelation::graph_of_map(&w, &w, &assocgeo::exactla::Matrix::from_ints(&f, &[&[c]])).unwrap();
    // z y⁻¹ x with x = 2, y = 2, z = 1 is 1
    let r = LinearRelation::ternary(&g(2), &g(2), &g(1)).unwrap();
    assert_eq!(r.graph(), g(1).graph());
    let r = LinearRelation::ternary(&g(1), &g(2), &g(1)).unwrap();
    assert_eq!(r.graph(), g(2).graph());
}
