use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::reference::{Table1Row, TABLE1, TABLE1_RANGES};
use crate::deployment::{Deployer, Mode};
use crate::error::{Error, Result};
use crate::stats::{run_suite, SuiteConfig, SuiteData, TestKind, Verdict};
use crate::topology::isolated_profile;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SeedReportConfig {
    pub seeds: Vec<u64>,
    pub nodes: usize,
    pub area: f64,
    pub ranges: Vec<f64>,
    pub epsilon: f64,
    pub suite: SuiteConfig,
}

impl Default for SeedReportConfig {
    fn default() -> Self {
        Self {
            seeds: TABLE1.iter().map(|r| r.seed).collect(),
            nodes: 100,
            area: 100.0,
            ranges: TABLE1_RANGES.to_vec(),
            epsilon: 0.0,
            suite: SuiteConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeSummary {
    pub isolated: Vec<usize>,
    pub ks: Verdict,
    pub chi2: Verdict,
    pub autocorrelation: Verdict,
    pub circular: Option<Verdict>,
}

impl ModeSummary {
    pub fn verdicts(&self) -> [Verdict; 3] {
        [self.ks, self.chi2, self.autocorrelation]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedRow {
    pub seed: u64,
    pub a: f64,
    pub c: f64,
    pub nongrid: ModeSummary,
    pub grid: ModeSummary,
}

/// Per-row agreement with a published row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub constants: bool,
    pub isolated_matches: usize,
    pub isolated_cells: usize,
    pub verdict_matches: usize,
    pub verdict_cells: usize,
}

impl SeedRow {
    /// Compares with the published row for the same seed, if there is one.
    /// Isolated counts are only compared when the configured ranges are the
    /// published ones.
    pub fn agreement(&self, ranges: &[f64]) -> Option<Agreement> {
        let reference = TABLE1.iter().find(|r| r.seed == self.seed)?;
        Some(compare(self, reference, ranges == TABLE1_RANGES))
    }
}

fn compare(row: &SeedRow, r: &Table1Row, with_isolated: bool) -> Agreement {
    let iso = |mine: &[usize], theirs: &[usize; 3]| {
        mine.iter().zip(theirs).filter(|(a, b)| a == b).count()
    };
    let ver = |mine: [Verdict; 3], theirs: &[Verdict; 3]| {
        mine.iter().zip(theirs).filter(|(a, b)| a == b).count()
    };
    let (isolated_matches, isolated_cells) = if with_isolated {
        (
            iso(&row.nongrid.isolated, &r.nongrid_isolated)
                + iso(&row.grid.isolated, &r.grid_isolated),
            6,
        )
    } else {
        (0, 0)
    };
    Agreement {
        constants: format!("{:.6}", row.a) == format!("{:.6}", r.a)
            && format!("{:.6}", row.c) == format!("{:.6}", r.c),
        isolated_matches,
        isolated_cells,
        verdict_matches: ver(row.nongrid.verdicts(), &r.nongrid_verdicts)
            + ver(row.grid.verdicts(), &r.grid_verdicts),
        verdict_cells: 6,
    }
}

fn summarize(
    deployer: &Deployer,
    mode: Mode,
    seed: u64,
    cfg: &SeedReportConfig,
) -> Result<ModeSummary> {
    let d = deployer.generate(mode, cfg.nodes, cfg.area, seed)?;
    let isolated = isolated_profile(&d, &cfg.ranges, cfg.epsilon)?;
    let outcome = run_suite(&SuiteData::from_deployment(&d)?, &cfg.suite)?;
    let get = |k| {
        outcome
            .verdict(k)
            .ok_or_else(|| Error::param(format!("suite produced no {k} result")))
    };
    Ok(ModeSummary {
        isolated,
        ks: get(TestKind::Ks)?,
        chi2: get(TestKind::Chi2)?,
        autocorrelation: get(TestKind::Autocorrelation)?,
        circular: outcome.verdict(TestKind::Circular),
    })
}

/// One row per seed, in the order given.
pub fn seed_report(cfg: &SeedReportConfig, deployer: &Deployer) -> Result<Vec<SeedRow>> {
    if cfg.seeds.is_empty() {
        return Err(Error::param("seed list is empty"));
    }
    cfg.seeds
        .iter()
        .map(|&seed| {
            let (a, c) = match deployer.constants {
                Some(pair) => pair,
                None => deployer.table.derive(seed),
            };
            Ok(SeedRow {
                seed,
                a,
                c,
                nongrid: summarize(deployer, Mode::NonGrid, seed, cfg)?,
                grid: summarize(deployer, Mode::Grid, seed, cfg)?,
            })
        })
        .collect()
}

/// Fixed-width text table. With `compare`, appends agreement columns for
/// seeds that have a published row.
pub fn render_seed_table(rows: &[SeedRow], ranges: &[f64], compare: bool) -> String {
    let mut out = String::new();
    let tr: Vec<String> = ranges.iter().map(|r| format!("TR={r}")).collect();
    let block = |label: &str| {
        let mut s = format!("{label:^w$}", w = tr.len() * 7 + 33);
        s.push_str(" |");
        s
    };
    let _ = write!(out, "{:>6} {:>9} {:>9} |", "", "", "");
    out.push_str(&block("non-grid"));
    out.push_str(&block("grid"));
    out.push('\n');
    let _ = write!(out, "{:>6} {:>9} {:>9} |", "X[0]", "a", "c");
    for _ in 0..2 {
        for t in &tr {
            let _ = write!(out, "{t:>7}");
        }
        let _ = write!(
            out,
            " {:>10} {:>10} {:>10} |",
            "KS-Test", "Chi2Test", "Autocorr"
        );
    }
    if compare {
        out.push_str("  agreement");
    }
    out.push('\n');

    let mut totals = (0, 0, 0, 0, 0);
    for row in rows {
        let _ = write!(out, "{:>6} {:>9.6} {:>9.6} |", row.seed, row.a, row.c);
        for m in [&row.nongrid, &row.grid] {
            for n in &m.isolated {
                let _ = write!(out, "{n:>7}");
            }
            let _ = write!(
                out,
                " {:>10} {:>10} {:>10} |",
                m.ks.to_string(),
                m.chi2.to_string(),
                m.autocorrelation.to_string()
            );
        }
        if compare {
            if let Some(a) = row.agreement(ranges) {
                let _ = write!(
                    out,
                    "  const={} iso={}/{} verdicts={}/{}",
                    if a.constants { "ok" } else { "DIFF" },
                    a.isolated_matches,
                    a.isolated_cells,
                    a.verdict_matches,
                    a.verdict_cells
                );
                totals.0 += 1;
                totals.1 += a.isolated_matches;
                totals.2 += a.isolated_cells;
                totals.3 += a.verdict_matches;
                totals.4 += a.verdict_cells;
            } else {
                out.push_str("  (no published row)");
            }
        }
        out.push('\n');
    }
    if compare && totals.0 > 0 {
        let _ = writeln!(
            out,
            "\nagreement over {} published rows: isolated {}/{}, verdicts {}/{}",
            totals.0, totals.1, totals.2, totals.3, totals.4
        );
    }
    out
}
