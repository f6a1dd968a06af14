//! Seed-reproducible wireless sensor network datasets: node deployments,
//! per-slot packet traffic, randomness tests and radius-graph topology.

pub mod cli;
pub mod constants;
pub mod deployment;
pub mod error;
pub mod generator;
pub mod io;
pub mod report;
pub mod stats;
pub mod topology;
pub mod traffic;

pub use constants::ConstantTable;
pub use error::{Error, Result};
