//! The quintary product Γ and the dilations Π_r.
//!
//! Three independent evaluations of Γ are provided: the operator route
//! (defined on the transversal domain only), the extended route (total, one
//! kernel computation), and a vector scan over finite fields. The affine
//! chart formulas give a fourth view on quasi-invertible inputs.

mod affine;
mod brute;
mod diagonal;
mod extended;
mod operators;

pub use affine::{homogeneous, quasi_inverse_check, AffineChart, AffineValue};
pub use brute::{gamma_bruteforce, pi_bruteforce, Expanded, ScanSpace, MAX_SCAN_SIZE};
pub use diagonal::{diagonal_gamma, in_common_complement, ConditionalValue, DiagonalCase};
pub use extended::{gamma_extended, pi_extended};
pub use operators::{
    delta_operator, l_operator, m_operator, mult_operator, projector, r_operator, MultOperator, ProjOperator,
};

use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::modspace::{transversal, Subspace};

/// Which parts of the transversal domain a tuple belongs to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GammaDomainFlags {
    pub in_dl: bool,
    pub in_dr: bool,
    pub in_dm: bool,
}

impl GammaDomainFlags {
    pub fn any(&self) -> bool {
        self.in_dl || self.in_dr || self.in_dm
    }
}

/// D_L: x⊤a, y⊤b. D_R: y⊤a, z⊤b. D_M: x⊤a, z⊤b and a, b have a common
/// complement in `universe`.
pub fn classify_domain<F: Field>(
    x: &Subspace<F>,
    a: &Subspace<F>,
    y: &Subspace<F>,
    b: &Subspace<F>,
    z: &Subspace<F>,
    universe: &[Subspace<F>],
) -> GammaDomainFlags {
    let xa = transversal(x, a);
    let zb = transversal(z, b);
    GammaDomainFlags {
        in_dl: xa && transversal(y, b),
        in_dr: transversal(y, a) && zb,
        in_dm: xa && zb && has_common_complement(a, b, universe),
    }
}

pub fn has_common_complement<F: Field>(a: &Subspace<F>, b: &Subspace<F>, universe: &[Subspace<F>]) -> bool {
    universe.iter().any(|c| transversal(c, a) && transversal(c, b))
}

/// Γ through L_{xayb}(z), R_{aybz}(x) or M_{xabz}(y), whichever applies
/// first.
pub fn gamma_operator_route<F: Field>(
    x: &Subspace<F>,
    a: &Subspace<F>,
    y: &Subspace<F>,
    b: &Subspace<F>,
    z: &Subspace<F>,
    universe: &[Subspace<F>],
) -> Result<Subspace<F>> {
    let n = x.ambient_dim();
    if [a, y, b, z].iter().any(|s| s.ambient_dim() != n) {
        return Err(Error::MixedSpaces);
    }
    let flags = classify_domain(x, a, y, b, z, universe);
    if flags.in_dl {
        Ok(l_operator(x, a, y, b)?.apply(z))
    } else if flags.in_dr {
        Ok(r_operator(a, y, b, z)?.apply(x))
    } else if flags.in_dm {
        Ok(m_operator(x, a, b, z)?.apply(y))
    } else {
        Err(Error::OutsideDomain)
    }
}

/// All operator-route values defined at the tuple, one per applicable case.
pub fn gamma_operator_values<F: Field>(
    x: &Subspace<F>,
    a: &Subspace<F>,
    y: &Subspace<F>,
    b: &Subspace<F>,
    z: &Subspace<F>,
    flags: GammaDomainFlags,
) -> Vec<Subspace<F>> {
    let mut out = Vec::with_capacity(3);
    if flags.in_dl {
        out.push(operators::l_unchecked(x, a, y, b).apply(z));
    }
    if flags.in_dr {
        out.push(operators::r_unchecked(a, y, b, z).apply(x));
    }
    if flags.in_dm {
        out.push(operators::m_unchecked(x, a, b, z).apply(y));
    }
    out
}

#[cfg(test)]
mod tests;
