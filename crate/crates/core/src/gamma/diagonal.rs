//! Closed lattice expressions for Γ on its diagonals.

use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::modspace::{join, meet, transversal, Subspace};

/// Diagonal patterns with a closed form. Each case names the coincidences
/// among (x, a, y, b, z) it requires.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagonalCase {
    /// x = y: (z ∨ (x∧a)) ∧ (b ∨ x)
    XEqualsY,
    /// x = y, dual form: (z ∧ (x∨b)) ∨ (a∧x)
    XEqualsYDual,
    /// a = z: a ∧ (b ∨ (x ∧ (y∨a)))
    AEqualsZ,
    /// b = z: b ∨ (a ∧ (x ∨ (y∧b)))
    BEqualsZ,
    /// x = y = a = b... (x,a,x,b,x): x
    Idempotent,
    /// (x,x,x,b,z): (z∨x) ∧ (b∨x)
    XAXBZ,
    /// (x,x,x,z,z): z ∨ x
    XXXZZ,
    /// (x,a,x,x,z): (z∨(x∧a)) ∧ x
    XAXXZ,
    /// (x,a,x,x,z) in modular form: (z∧x) ∨ (a∧x)
    XAXXZModular,
    /// (x,a,x,x,a): a ∧ x
    XAXXA,
    /// (x,a,x,b,a): a ∧ (b∨x)
    XAXBA,
    /// (x,a,x,a,z): (z∨(x∧a)) ∧ (x∨a)
    XAXAZ,
    /// (x,a,x,z,z): z ∨ (x∧a)
    XAXZZ,
    /// (x,a,y,x,a): a ∧ x
    XAYXA,
    /// (a,a,y,b,b): a ∨ b
    AAYBB,
    /// (x,a,y,a,a): a
    XAYAA,
}

impl DiagonalCase {
    pub const ALL: [DiagonalCase; 16] = [
        DiagonalCase::XEqualsY,
        DiagonalCase::XEqualsYDual,
        DiagonalCase::AEqualsZ,
        DiagonalCase::BEqualsZ,
        DiagonalCase::Idempotent,
        DiagonalCase::XAXBZ,
        DiagonalCase::XXXZZ,
        DiagonalCase::XAXXZ,
        DiagonalCase::XAXXZModular,
        DiagonalCase::XAXXA,
        DiagonalCase::XAXBA,
        DiagonalCase::XAXAZ,
        DiagonalCase::XAXZZ,
        DiagonalCase::XAYXA,
        DiagonalCase::AAYBB,
        DiagonalCase::XAYAA,
    ];

    /// Whether the tuple lies on this diagonal.
    pub fn matches<F: Field>(self, t: [&Subspace<F>; 5]) -> bool {
        let [x, a, y, b, z] = t;
        match self {
            DiagonalCase::XEqualsY | DiagonalCase::XEqualsYDual => x == y,
            DiagonalCase::AEqualsZ => a == z,
            DiagonalCase::BEqualsZ => b == z,
            DiagonalCase::Idempotent => x == y && y == z,
            DiagonalCase::XAXBZ => x == a && a == y,
            DiagonalCase::XXXZZ => x == a && a == y && b == z,
            DiagonalCase::XAXXZ | DiagonalCase::XAXXZModular => x == y && y == b,
            DiagonalCase::XAXXA => x == y && y == b && a == z,
            DiagonalCase::XAXBA => x == y && a == z,
            DiagonalCase::XAXAZ => x == y && a == b,
            DiagonalCase::XAXZZ => x == y && b == z,
            DiagonalCase::XAYXA => x == b && a == z,
            DiagonalCase::AAYBB => x == a && b == z,
            DiagonalCase::XAYAA => a == b && b == z,
        }
    }

    /// The closed form, evaluated without checking the pattern.
    pub fn evaluate<F: Field>(self, t: [&Subspace<F>; 5]) -> Subspace<F> {
        let [x, a, y, b, z] = t;
        match self {
            DiagonalCase::XEqualsY => meet(&join(z, &meet(x, a)), &join(b, x)),
            DiagonalCase::XEqualsYDual => join(&meet(z, &join(x, b)), &meet(a, x)),
            DiagonalCase::AEqualsZ => meet(a, &join(b, &meet(x, &join(y, a)))),
            DiagonalCase::BEqualsZ => join(b, &meet(a, &join(x, &meet(y, b)))),
            DiagonalCase::Idempotent => x.clone(),
            DiagonalCase::XAXBZ => meet(&join(z, x), &join(b, x)),
            DiagonalCase::XXXZZ => join(z, x),
            DiagonalCase::XAXXZ => meet(&join(z, &meet(x, a)), x),
            DiagonalCase::XAXXZModular => join(&meet(z, x), &meet(a, x)),
            DiagonalCase::XAXXA => meet(a, x),
            DiagonalCase::XAXBA => meet(a, &join(b, x)),
            DiagonalCase::XAXAZ => meet(&join(z, &meet(x, a)), &join(x, a)),
            DiagonalCase::XAXZZ => join(z, &meet(x, a)),
            DiagonalCase::XAYXA => meet(a, x),
            DiagonalCase::AAYBB => join(a, b),
            DiagonalCase::XAYAA => a.clone(),
        }
    }
}

/// Γ on a diagonal via its lattice expression.
pub fn diagonal_gamma<F: Field>(case: DiagonalCase, t: [&Subspace<F>; 5]) -> Result<Subspace<F>> {
    if !case.matches(t) {
        return Err(Error::HypothesisNotMet("tuple does not lie on the selected diagonal"));
    }
    Ok(case.evaluate(t))
}

/// Values forced by transversality conditions alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConditionalValue {
    /// b∨x = W and a∧x = 0 give Γ(x,a,x,b,z) = z
    DiagonalIsZ,
    /// a∨y = W and b∨x = W give Γ(x,a,y,b,a) = a
    FixesA,
    /// x∧a = 0 and y∧b = 0 give Γ(x,a,y,b,b) = b
    FixesB,
}

impl ConditionalValue {
    pub const ALL: [ConditionalValue; 3] =
        [ConditionalValue::DiagonalIsZ, ConditionalValue::FixesA, ConditionalValue::FixesB];

    /// Returns the predicted value if the tuple satisfies the hypotheses.
    pub fn predict<F: Field>(self, t: [&Subspace<F>; 5]) -> Option<Subspace<F>> {
        let [x, a, y, b, z] = t;
        match self {
            ConditionalValue::DiagonalIsZ => {
                (x == y && join(b, x).is_full() && meet(a, x).is_zero()).then(|| z.clone())
            }
            ConditionalValue::FixesA => (z == a && join(a, y).is_full() && join(b, x).is_full()).then(|| a.clone()),
            ConditionalValue::FixesB => (z == b && meet(x, a).is_zero() && meet(y, b).is_zero()).then(|| b.clone()),
        }
    }
}

/// Whether `x` is a common complement of `a` and `b`.
pub fn in_common_complement<F: Field>(x: &Subspace<F>, a: &Subspace<F>, b: &Subspace<F>) -> bool {
    transversal(x, a) && transversal(x, b)
}
