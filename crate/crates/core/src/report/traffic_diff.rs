//! Comparison of the traffic generators with the published packet table.
//!
//! Besides the three generators, the diff runs a scalar chain
//! `x <- (a x + c) mod (p_max - p_min) + p_min` with `X0 = table[p_max]`,
//! `a = table[p_min]`, `c = table[p_min + len/2]`. The published uniform
//! block satisfies this recurrence to print precision, and the published
//! exponential block is the inverse-CDF map of the same chain one step
//! earlier.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::reference::{TABLE2_EXPONENTIAL, TABLE2_UNIFORM};
use crate::constants::ConstantTable;
use crate::error::Result;
use crate::generator::real_mod;
use crate::traffic::{exp_map, Distribution, TrafficGenerator};

/// Half a unit in the second decimal, plus float slack.
const PRINT_TOLERANCE: f64 = 0.005 + 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TrafficDiffConfig {
    pub p_min: f64,
    pub p_max: f64,
    pub nodes: usize,
    pub slots: usize,
    pub rate: f64,
}

impl Default for TrafficDiffConfig {
    fn default() -> Self {
        Self {
            p_min: 2.0,
            p_max: 10.0,
            nodes: 80,
            slots: 5,
            rate: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorDiff {
    pub generator: String,
    /// Published block compared against: `uniform` or `exponential`.
    pub block: String,
    pub cells: usize,
    pub matches: usize,
    /// Cells matched before the first mismatch, in row-major order.
    pub leading_matches: usize,
    pub max_abs_diff: f64,
    pub mean_abs_diff: f64,
    pub in_range: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrafficDiff {
    pub config: TrafficDiffConfig,
    pub generators: Vec<GeneratorDiff>,
    /// Published exponential cells equal (at print precision) to the
    /// inverse-CDF map of the preceding published uniform cell.
    pub shift_consistent_cells: usize,
    pub shift_checked_cells: usize,
}

fn published(block: &str) -> Vec<f64> {
    let t = if block == "uniform" {
        &TABLE2_UNIFORM
    } else {
        &TABLE2_EXPONENTIAL
    };
    t.iter().flatten().copied().collect()
}

fn diff(name: &str, block: &str, values: &[f64], cfg: &TrafficDiffConfig) -> GeneratorDiff {
    let reference = published(block);
    let n = values.len().min(reference.len());
    let deltas: Vec<f64> = values
        .iter()
        .zip(&reference)
        .map(|(v, r)| (v - r).abs())
        .collect();
    GeneratorDiff {
        generator: name.into(),
        block: block.into(),
        cells: n,
        matches: deltas.iter().filter(|d| **d <= PRINT_TOLERANCE).count(),
        leading_matches: deltas.iter().take_while(|d| **d <= PRINT_TOLERANCE).count(),
        max_abs_diff: deltas.iter().copied().fold(0.0, f64::max),
        mean_abs_diff: deltas.iter().sum::<f64>() / n.max(1) as f64,
        in_range: values.iter().all(|v| *v >= cfg.p_min && *v < cfg.p_max),
    }
}

/// Uniform and exponential blocks of the scalar chain, row-major.
pub fn chain_traffic(cfg: &TrafficDiffConfig, table: &ConstantTable) -> (Vec<f64>, Vec<f64>) {
    let len = table.len() as u64;
    let x0 = table.at(cfg.p_max.floor() as u64);
    let a = table.at(cfg.p_min.floor() as u64);
    let c = table.at((cfg.p_min.floor() as u64) % len + table.half());
    let width = cfg.p_max - cfg.p_min;
    let cells = cfg.nodes * cfg.slots;
    let mut x = x0;
    let xs: Vec<f64> = (0..=cells)
        .map(|_| {
            x = (real_mod(a * x + c, width) + cfg.p_min).min(cfg.p_max.next_down());
            x
        })
        .collect();
    let uniform = xs[1..].to_vec();
    let exponential = xs[..cells]
        .iter()
        .map(|&v| exp_map(v, cfg.p_min, cfg.p_max, cfg.rate))
        .collect();
    (uniform, exponential)
}

pub fn traffic_diff(cfg: &TrafficDiffConfig, table: &ConstantTable) -> Result<TrafficDiff> {
    let gen = TrafficGenerator {
        table: table.clone(),
        ..TrafficGenerator::default()
    };
    let mut generators = Vec::new();
    for (dist, block) in [
        (Distribution::Uniform, "uniform"),
        (Distribution::ExponentialTransform, "exponential"),
        (Distribution::ExponentialRecurrence, "exponential"),
    ] {
        let m = gen.generate(dist, cfg.nodes, cfg.slots, cfg.p_min, cfg.p_max, cfg.rate)?;
        generators.push(diff(dist.as_str(), block, &m.flatten(), cfg));
    }
    for (label, t) in [
        ("chain", table.clone()),
        ("chain/full-precision", ConstantTable::full_precision()),
    ] {
        let (u, e) = chain_traffic(cfg, &t);
        generators.push(diff(label, "uniform", &u, cfg));
        generators.push(diff(label, "exponential", &e, cfg));
    }

    let u = published("uniform");
    let e = published("exponential");
    let shift_consistent_cells = u
        .iter()
        .zip(&e[1..])
        .filter(|(uv, ev)| (exp_map(**uv, cfg.p_min, cfg.p_max, cfg.rate) - **ev).abs() <= 0.015)
        .count();
    Ok(TrafficDiff {
        config: cfg.clone(),
        generators,
        shift_consistent_cells,
        shift_checked_cells: u.len() - 1,
    })
}

pub fn render_traffic_diff(d: &TrafficDiff) -> String {
    let c = &d.config;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "packet table diff: p_min={} p_max={} nodes={} slots={} rate={}",
        c.p_min, c.p_max, c.nodes, c.slots, c.rate
    );
    let _ = writeln!(
        out,
        "{:<22} {:<12} {:>9} {:>8} {:>9} {:>9} {:>8}",
        "generator", "block", "matches", "leading", "max|d|", "mean|d|", "range"
    );
    for g in &d.generators {
        let _ = writeln!(
            out,
            "{:<22} {:<12} {:>5}/{:<3} {:>8} {:>9.4} {:>9.4} {:>8}",
            g.generator,
            g.block,
            g.matches,
            g.cells,
            g.leading_matches,
            g.max_abs_diff,
            g.mean_abs_diff,
            if g.in_range { "ok" } else { "OUT" }
        );
    }
    let _ = writeln!(
        out,
        "published exponential cell k+1 = transform of published uniform cell k: {}/{} within 0.015",
        d.shift_consistent_cells, d.shift_checked_cells
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_reproduces_leading_cells() {
        let cfg = TrafficDiffConfig::default();
        let (u, e) = chain_traffic(&cfg, &ConstantTable::canonical());
        assert_eq!(u.len(), 400);
        // first published cells: uniform 6.06, 7.55; exponential 3.63, 2.93
        assert!((u[0] - 6.06).abs() <= PRINT_TOLERANCE);
        assert!((u[1] - 7.55).abs() <= PRINT_TOLERANCE);
        assert!((e[0] - 3.63).abs() <= PRINT_TOLERANCE);
        assert!((e[1] - 2.93).abs() <= PRINT_TOLERANCE);
    }

    #[test]
    fn diff_covers_all_generators() {
        let d = traffic_diff(&TrafficDiffConfig::default(), &ConstantTable::canonical()).unwrap();
        assert_eq!(d.generators.len(), 7);
        assert!(d.generators.iter().all(|g| g.in_range && g.cells == 400));
        let text = render_traffic_diff(&d);
        assert!(text.contains("exp-recurrence"));
    }
}
