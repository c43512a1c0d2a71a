//! Verification scenarios, report formats and file schemas on top of
//! [`fbcalc_core`].

pub mod constants;
pub mod error;
pub mod report;
pub mod scenarios;
pub mod schema;

pub use error::AppError;
pub use report::{Check, Format, ScenarioReport, Verdict, VerificationReport};
pub use scenarios::{run_scenario, ScenarioConfig, SCENARIOS};
