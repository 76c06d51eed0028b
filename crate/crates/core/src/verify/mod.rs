//! Identity registry, suite runner and report emission.
//!
//! Every checked relation is an [`IdentityRecord`]: a stable id, the formula it
//! states, the guard it needs, its tolerance and a check function. [`run_suite`]
//! evaluates the records of a suite for every requested κ in parallel and returns a
//! [`VerificationReport`] sorted by `(suite, id, κ)`.

mod registry;
mod report;
mod runner;

pub use registry::{registry, Check, GlobalCtx, IdentityRecord, Needs, SectorCtx, Suite};
pub use report::{emit_report, Format, IdentityResult, Status, VerificationReport};
pub use runner::{parse_kappas, run_suite, RunConfig, SCALING_LAMBDAS};
