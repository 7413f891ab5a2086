//! Simulation of interacting particle systems with alpha-stable collateral
//! jumps, together with the explicit subordinator coupling that represents
//! the interaction term, a mean-field auxiliary system driven by the coupled
//! subordinator, and an experiment harness that measures the strong
//! convergence rate of the finite system towards its mean-field limit.
//!
//! The crate is organised around the pipeline
//!
//! ```text
//! model  ->  finite  ->  coupling  ->  meanfield  ->  experiment
//!               |            |             |
//!            atom log   slot records   paired trajectories
//! ```
//!
//! with `stable` providing exact one-sided stable sampling, `metric`
//! providing the concave distance function `a` and transport oracles, and
//! `rng` providing reproducible substreams for parallel replication.

pub mod config;
pub mod coupling;
pub mod error;
pub mod experiment;
pub mod export;
pub mod finite;
pub mod meanfield;
pub mod metric;
pub mod model;
pub mod rng;
pub mod stable;
pub mod stats;
pub mod suite;

pub use error::Error;
pub use rng::RngStream;
pub use stable::StableParams;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
