//! Experiment driver for quantum Tanner codes: configs, error models,
//! decoding sweeps, scaling benchmarks and robustness reports.

pub mod bench;
pub mod certify;
pub mod config;
pub mod error;
pub mod experiment;
pub mod instance;
pub mod sampling;
pub mod schema;

pub use config::ExperimentConfig;
pub use error::{HarnessError, Result};
