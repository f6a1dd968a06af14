//! Batch reports: a per-seed table of derived constants, isolated-node
//! counts and test verdicts for both deployment modes, and a cell-by-cell
//! comparison of the traffic generators against a published packet table.

pub mod reference;
mod seeds;
mod traffic_diff;

pub use seeds::{
    render_seed_table, seed_report, Agreement, ModeSummary, SeedReportConfig, SeedRow,
};
pub use traffic_diff::{
    chain_traffic, render_traffic_diff, traffic_diff, GeneratorDiff, TrafficDiff, TrafficDiffConfig,
};
