//! Grassmannian enumeration, index tables for Γ and Π_r, and the
//! verification suites.

mod enumerate;
mod report;
mod rng;
mod suites;
mod table;

pub use enumerate::{enumerate_subspaces, galois_number, gaussian_binomial, Grassmannian, MAX_ENUMERATION_VECTORS, MAX_GRASSMANNIAN};
pub use report::{scan_tuples, CheckReport, Failure, Mode, SuiteReport, DEFAULT_BUDGET, MAX_RECORDED_FAILURES, SAMPLE_SIZE};
pub use rng::SplitMix64;
pub use table::{DirectGamma, GammaOracle, GammaTable, PiTable, Quintary, Ternary, MAX_TABLE_ENTRIES};
pub use suites::{cross_route_check, run_suite, space_label, SuiteContext, RANDOM_RELATIONS, SUITE_IDS};
