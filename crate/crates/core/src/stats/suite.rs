//! Runs the configured tests over every stream of a dataset.
//!
//! A deployment contributes its normalized X and Y coordinate streams plus
//! the X/Y pair for circular correlation; a traffic matrix contributes its
//! entries in generation order. KS additionally runs on each contiguous
//! quarter of a stream, and a test is `Satisfied` overall only when every
//! sample it ran on passes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::critical::{CriticalValues, StandardTables};
use super::independence::{
    autocorrelation_test_with, circular_correlation_test_with, AutocorrelationOptions,
    PairIndexing, SigmaForm,
};
use super::sample::{normalize, subsample};
use super::uniformity::{chi2_test_with, ks_test_with};
use super::{TestKind, TestReport, Verdict};
use crate::deployment::{Deployment, Point};
use crate::error::{Error, Result};
use crate::traffic::TrafficMatrix;

/// Streams shorter than this are not split into quarters (each quarter
/// needs the KS minimum of five values).
pub const MIN_QUARTERED: usize = 20;

/// Which tests also run on the four quarter subsamples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarterPolicy {
    pub ks: bool,
    pub chi2: bool,
    pub autocorrelation: bool,
}

impl Default for QuarterPolicy {
    fn default() -> Self {
        Self {
            ks: true,
            chi2: false,
            autocorrelation: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SuiteConfig {
    pub alpha_ks: f64,
    pub alpha_chi2: f64,
    pub alpha_auto: f64,
    pub alpha_circular: f64,
    pub classes: usize,
    pub start: usize,
    pub lags: Vec<usize>,
    pub circular_lags: Vec<usize>,
    pub quarters: QuarterPolicy,
    pub indexing: PairIndexing,
    pub sigma: SigmaForm,
    /// Additive slack on every critical value.
    pub slack: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            alpha_ks: 0.01,
            alpha_chi2: 0.001,
            alpha_auto: 0.01,
            alpha_circular: 0.001,
            classes: 10,
            start: 1,
            lags: vec![1],
            circular_lags: vec![0],
            quarters: QuarterPolicy::default(),
            indexing: PairIndexing::default(),
            sigma: SigmaForm::default(),
            slack: 0.0,
        }
    }
}

/// Normalized streams to test.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteData {
    pub streams: Vec<(String, Vec<f64>)>,
    /// Stream indices for circular correlation.
    pub pair: Option<(usize, usize)>,
}

impl SuiteData {
    pub fn from_deployment(d: &Deployment) -> Result<Self> {
        Self::from_points(&d.points, d.area_width, d.area_height)
    }

    pub fn from_points(points: &[Point], width: f64, height: f64) -> Result<Self> {
        let xs: Vec<f64> = points.iter().map(|p| p.x).collect();
        let ys: Vec<f64> = points.iter().map(|p| p.y).collect();
        Ok(Self {
            streams: vec![
                ("x".into(), normalize(&xs, 0.0, width)?),
                ("y".into(), normalize(&ys, 0.0, height)?),
            ],
            pair: Some((0, 1)),
        })
    }

    pub fn from_traffic(m: &TrafficMatrix) -> Result<Self> {
        Self::from_matrix(&m.values, m.p_min, m.p_max)
    }

    /// Row-major flattening of `values`, normalized against `[p_min, p_max)`.
    pub fn from_matrix(values: &[Vec<f64>], p_min: f64, p_max: f64) -> Result<Self> {
        let flat: Vec<f64> = values.iter().flatten().copied().collect();
        Ok(Self {
            streams: vec![("packets".into(), normalize(&flat, p_min, p_max)?)],
            pair: None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub reports: Vec<TestReport>,
}

impl SuiteOutcome {
    /// Aggregate verdict for `kind`; `None` when that test did not run.
    pub fn verdict(&self, kind: TestKind) -> Option<Verdict> {
        let mut ran = false;
        for r in self.reports.iter().filter(|r| r.test == kind) {
            ran = true;
            if !r.verdict.is_satisfied() {
                return Some(Verdict::Rejected);
            }
        }
        ran.then_some(Verdict::Satisfied)
    }

    pub fn verdicts(&self) -> BTreeMap<TestKind, Verdict> {
        TestKind::ALL
            .iter()
            .filter_map(|&k| self.verdict(k).map(|v| (k, v)))
            .collect()
    }

    pub fn all_satisfied(&self) -> bool {
        self.reports.iter().all(|r| r.verdict.is_satisfied())
    }
}

pub fn run_suite(data: &SuiteData, config: &SuiteConfig) -> Result<SuiteOutcome> {
    run_suite_with(data, config, &StandardTables)
}

pub fn run_suite_with(
    data: &SuiteData,
    config: &SuiteConfig,
    critical: &dyn CriticalValues,
) -> Result<SuiteOutcome> {
    if data.streams.is_empty() || data.streams.iter().any(|(_, s)| s.is_empty()) {
        return Err(Error::param("no data to validate"));
    }
    let mut reports = Vec::new();
    for (name, stream) in &data.streams {
        let mut windows: Vec<(String, &[f64], bool)> =
            vec![(name.clone(), stream.as_slice(), true)];
        if stream.len() >= MIN_QUARTERED {
            for q in 0..4 {
                windows.push((format!("{name}/q{}", q + 1), subsample(stream, q)?, false));
            }
        }
        for (scope, window, full) in &windows {
            if *full || config.quarters.ks {
                let r = ks_test_with(window, config.alpha_ks, critical)?;
                reports.push(r.with_scope(scope.as_str()).relaxed(config.slack));
            }
            if *full || config.quarters.chi2 {
                let r = chi2_test_with(window, config.classes, config.alpha_chi2, critical)?;
                reports.push(r.with_scope(scope.as_str()).relaxed(config.slack));
            }
            if *full || config.quarters.autocorrelation {
                for &lag in &config.lags {
                    let opts = AutocorrelationOptions {
                        start: config.start,
                        lag,
                        indexing: config.indexing,
                        sigma: config.sigma,
                    };
                    let r = autocorrelation_test_with(window, &opts, config.alpha_auto, critical)?;
                    reports.push(r.with_scope(scope.as_str()).relaxed(config.slack));
                }
            }
        }
    }
    if let Some((i, j)) = data.pair {
        let (xn, x) = &data.streams[i];
        let (yn, y) = &data.streams[j];
        for &lag in &config.circular_lags {
            let r = circular_correlation_test_with(x, y, lag, config.alpha_circular, critical)?;
            reports.push(r.with_scope(format!("{xn}~{yn}")).relaxed(config.slack));
        }
    }
    Ok(SuiteOutcome { reports })
}
