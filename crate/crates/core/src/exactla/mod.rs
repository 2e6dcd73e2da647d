//! Exact linear algebra over GF(p) and the rationals.

pub mod field;
pub mod matrix;

pub use field::{FieldSpec, Field, FiniteField, PrimeField, Rational, Rationals};
pub use matrix::Matrix;
