//! Named, seeded verification scenarios for the complex-measure calculus.
//!
//! Every scenario draws its random inputs from a seeded ChaCha stream, runs a
//! family of residual checks against closed-form or independent oracles and
//! returns a [`Report`]. Some scenarios also produce data series for plotting.

pub mod config;
mod error;
pub mod params;
pub mod registry;
pub mod report;
mod sample;
mod scenarios;

pub use config::Config;
pub use error::{VerifyError, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
pub use params::{ParamDefault, ParamSpec, Params, Value};
pub use registry::{find, registry, run, Outcome, Scenario, AREAS, DEFAULT_SEED};
pub use report::{write_series_csv, Check, Quantity, Report, SeriesPoint};
