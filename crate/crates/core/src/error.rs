use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("span is not invariant under action generator {generator}")]
    NotASubmodule { generator: usize },
    #[error("operands live in different module spaces")]
    MixedSpaces,
    #[error("{first} and {second} are not transversal")]
    NotTransversal {
        first: &'static str,
        second: &'static str,
    },
    #[error("tuple lies outside the domain of the operator route")]
    OutsideDomain,
    #[error("problem too large for exhaustive treatment: {0}")]
    TooLarge(String),
    #[error("pair ({0}) is not quasi-invertible")]
    NotQuasiInvertible(&'static str),
    #[error("ternary product leaves the carrier at tuple {0:?}")]
    ClosureViolation(Vec<usize>),
    #[error("table is not a torsor: {0}")]
    NotATorsor(String),
    #[error("unit is not an element of the carrier")]
    UnitNotInCarrier,
    #[error("elements are not mutually transversal")]
    NotMutuallyTransversal,
    #[error("pair cannot be imbedded: {0}")]
    UnsupportedPair(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotMet(&'static str),
    #[error("oracle produced an inconsistent result: {0}")]
    OracleInconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
