//! Exact computation of the quintary Grassmannian product Γ and the
//! dilations Π_r, with the machinery to check their identities on small
//! finite-field module spaces.

pub mod error;
pub mod exactla;
pub mod gamma;
pub mod modspace;
pub mod oracle;
pub mod pairs;
pub mod relations;
pub mod torsor;

pub use error::{Error, Result};
pub use exactla::{Field, FieldSpec, FiniteField, Matrix, PrimeField, Rational, Rationals};
pub use modspace::{ModuleSpace, Subspace};
