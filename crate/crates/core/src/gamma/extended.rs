use crate::exactla::{Field, Matrix};
use crate::modspace::Subspace;

/// One block-constraint: `ann · Σ_k coeff_k · u_k = 0` over the unknown
/// blocks `u_0, u_1, ...`.
struct Constraint<'a, F: Field> {
    ann: &'a Matrix<F>,
    coeffs: Vec<F::Elem>,
}

/// Solves the stacked constraints for `(u_0, ..., u_{k-1}) ∈ (𝕂ⁿ)^k` and
/// returns the projection of the solution space to `u_0`.
fn solve_and_project<F: Field>(field: &F, n: usize, blocks: usize, constraints: &[Constraint<'_, F>]) -> Subspace<F> {
    let total: usize = constraints.iter().map(|c| c.ann.rows()).sum();
    let mut sys = Matrix::zeros(field, total, n * blocks);
    let mut row = 0;
    for c in constraints {
        for r in 0..c.ann.rows() {
            for (k, &coeff) in c.coeffs.iter().enumerate() {
                if field.is_zero(coeff) {
                    continue;
                }
                for j in 0..n {
                    sys.set(row, k * n + j, field.mul(coeff, c.ann.get(r, j)));
                }
            }
            row += 1;
        }
    }
    let kernel = sys.kernel();
    Subspace::span_of(&kernel.submatrix(0..kernel.rows(), 0..n))
}

fn ambient<F: Field>(subs: &[&Subspace<F>]) -> usize {
    let n = subs[0].ambient_dim();
    assert!(
        subs.iter().all(|s| s.ambient_dim() == n),
        "operands live in different module spaces"
    );
    n
}

/// Γ(x,a,y,b,z) on all of 𝒳⁵: the set of ω for which there are α ∈ a and
/// β ∈ b with ω+α ∈ z, ω+α+β ∈ y and ω+β ∈ x.
pub fn gamma_extended<F: Field>(
    x: &Subspace<F>,
    a: &Subspace<F>,
    y: &Subspace<F>,
    b: &Subspace<F>,
    z: &Subspace<F>,
) -> Subspace<F> {
    let n = ambient(&[x, a, y, b, z]);
    let f = x.field();
    let (o, l) = (f.zero(), f.one());
    let cs = [
        Constraint { ann: z.annihilator(), coeffs: vec![l, l, o] },
        Constraint { ann: y.annihilator(), coeffs: vec![l, l, l] },
        Constraint { ann: x.annihilator(), coeffs: vec![l, o, l] },
        Constraint { ann: a.annihilator(), coeffs: vec![o, l, o] },
        Constraint { ann: b.annihilator(), coeffs: vec![o, o, l] },
    ];
    solve_and_project(f, n, 3, &cs)
}

/// Π_r(x,a,z) on all of 𝒳³: the set of ω = (1−r)ξ + rζ with ξ ∈ x, ζ ∈ z
/// and ζ − ξ ∈ a.
pub fn pi_extended<F: Field>(r: F::Elem, x: &Subspace<F>, a: &Subspace<F>, z: &Subspace<F>) -> Subspace<F> {
    let n = ambient(&[x, a, z]);
    let f = x.field();
    let (o, l) = (f.zero(), f.one());
    let ident = Matrix::identity(f, n);
    let cs = [
        Constraint { ann: &ident, coeffs: vec![l, f.neg(f.sub(l, r)), f.neg(r)] },
        Constraint { ann: a.annihilator(), coeffs: vec![o, f.neg(l), l] },
        Constraint { ann: x.annihilator(), coeffs: vec![o, l, o] },
        Constraint { ann: z.annihilator(), coeffs: vec![o, o, l] },
    ];
    solve_and_project(f, n, 3, &cs)
}
