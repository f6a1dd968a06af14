//! Uniformity and independence tests with threshold verdicts.
//!
//! Four tests are provided: Kolmogorov-Smirnov and chi-square for
//! uniformity on `[0, 1)`, lagged autocorrelation, and circular
//! cross-correlation. Each returns a [`TestReport`] whose verdict is
//! `Satisfied` when the statistic does not exceed the critical value.
//!
//! The chi-square verdict uses the conventional direction (reject when the
//! statistic is large).

mod critical;
mod independence;
mod sample;
mod suite;
mod uniformity;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use critical::{
    CriticalValues, StandardTables, CHI2_TABLE_MAX_DOF, KS_ASYMPTOTIC, KS_EXACT_MAX_N,
    SUPPORTED_ALPHAS, Z_TWO_SIDED,
};
pub use independence::{
    autocorrelation_test, autocorrelation_test_with, circular_correlation_test,
    circular_correlation_test_with, AutocorrelationOptions, PairIndexing, SigmaForm,
};
pub use sample::{normalize, subsample};
pub use suite::{run_suite, run_suite_with, QuarterPolicy, SuiteConfig, SuiteData, SuiteOutcome};
pub use uniformity::{chi2_test, chi2_test_with, ks_statistics, ks_test, ks_test_with};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TestKind {
    Ks,
    Chi2,
    Autocorrelation,
    Circular,
}

impl TestKind {
    pub const ALL: [TestKind; 4] = [
        TestKind::Ks,
        TestKind::Chi2,
        TestKind::Autocorrelation,
        TestKind::Circular,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TestKind::Ks => "ks",
            TestKind::Chi2 => "chi2",
            TestKind::Autocorrelation => "autocorrelation",
            TestKind::Circular => "circular",
        }
    }
}

impl fmt::Display for TestKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Satisfied,
    Rejected,
}

impl Verdict {
    pub fn from_bound(statistic: f64, critical: f64) -> Self {
        if statistic <= critical {
            Verdict::Satisfied
        } else {
            Verdict::Rejected
        }
    }

    pub fn is_satisfied(&self) -> bool {
        matches!(self, Verdict::Satisfied)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Satisfied => "Satisfied",
            Verdict::Rejected => "Rejected",
        })
    }
}

/// Outcome of one test on one sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestReport {
    pub test: TestKind,
    /// Which stream and subsample the test ran on, e.g. `x/q2`.
    #[serde(default)]
    pub scope: String,
    pub statistic: f64,
    pub critical_value: f64,
    pub alpha: f64,
    pub verdict: Verdict,
    pub sample_size: usize,
    #[serde(default)]
    pub details: BTreeMap<String, f64>,
}

impl TestReport {
    pub(crate) fn new(
        test: TestKind,
        statistic: f64,
        critical_value: f64,
        alpha: f64,
        sample_size: usize,
    ) -> Self {
        Self {
            test,
            scope: String::new(),
            statistic,
            critical_value,
            alpha,
            verdict: Verdict::from_bound(statistic, critical_value),
            sample_size,
            details: BTreeMap::new(),
        }
    }

    pub(crate) fn detail(mut self, key: &str, value: f64) -> Self {
        self.details.insert(key.to_string(), value);
        self
    }

    pub fn with_scope(mut self, scope: impl Into<String>) -> Self {
        self.scope = scope.into();
        self
    }

    /// Adds `slack` to the critical value and re-evaluates the verdict.
    pub fn relaxed(mut self, slack: f64) -> Self {
        if slack != 0.0 {
            self.critical_value += slack;
            self.verdict = Verdict::from_bound(self.statistic, self.critical_value);
            self.details.insert("slack".into(), slack);
        }
        self
    }
}
