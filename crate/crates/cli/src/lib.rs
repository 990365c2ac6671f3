//! Claim registry, JSON reports and ring export behind the `ufdlab` binary.
//!
//! Every claim is a finite, parameterized check owned by one module of the
//! `ufdlab` library. Handlers are pure, so claims can run concurrently.

#[macro_use]
mod fields;

mod claims;
mod export;
mod params;
mod report;
mod runner;
pub mod suite;

pub use claims::{find, registry, ClaimEntry};
pub use export::{export_ring, ExportFormat};
pub use params::Params;
pub use report::{Bound, ClaimReport, Status, SuiteItem, SuiteReport};
pub use runner::{exit_code, run_claim, run_claim_with_timeout, run_many, ClaimError, Outcome, DEFAULT_TIMEOUT};

/// Version stamped into every report.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
