//! Generalized entropies with escort-weighted conditional forms, the
//! lambda-deformed addition that composes them, and a harness that checks
//! their composition axioms numerically.
//!
//! The families are Shannon, the two-branch escort family, Nath (with Renyi
//! as its normalized member) and Havrda-Charvat-Tsallis. Logarithms are base 2.

pub mod checker;
pub mod deformed;
pub mod distributions;
pub mod entropies;
pub mod error;
pub mod generators;
pub mod io;
mod numeric;

pub use checker::{
    run_suite, CheckConfig, CheckRecord, CheckReport, OverallVerdict, Residual, Verdict,
};
pub use deformed::Deformation;
pub use distributions::{Distribution, JointDistribution};
pub use entropies::{EntropyFamily, FamilyParams};
pub use error::{Error, Result};
pub use generators::{GeneratorKind, GeneratorSpec};
pub use numeric::{compensated_sum, CompensatedSum};
