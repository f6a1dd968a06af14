use serde::{Deserialize, Serialize};

use super::critical::{CriticalValues, StandardTables};
use super::{TestKind, TestReport};
use crate::error::{Error, Result};

/// How the lagged product pairs are indexed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairIndexing {
    /// `R[i + k*m] * R[i + (k+1)*m]`
    #[default]
    Lag,
    /// `R[i + k*M] * R[i + (k+1)*m]`, with the first index stepping by `M`.
    Printed,
}

/// Standard deviation used to scale the autocorrelation estimate.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SigmaForm {
    /// `sqrt((13M + 7) / (12(M + 1)))`
    #[default]
    Printed,
    /// `sqrt(13M + 7) / (12(M + 1))`, the usual textbook estimator.
    Textbook,
}

impl SigmaForm {
    fn sigma(&self, m: usize) -> f64 {
        let m = m as f64;
        match self {
            SigmaForm::Printed => ((13.0 * m + 7.0) / (12.0 * (m + 1.0))).sqrt(),
            SigmaForm::Textbook => (13.0 * m + 7.0).sqrt() / (12.0 * (m + 1.0)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AutocorrelationOptions {
    /// 1-based index of the first element.
    pub start: usize,
    pub lag: usize,
    #[serde(default)]
    pub indexing: PairIndexing,
    #[serde(default)]
    pub sigma: SigmaForm,
}

impl Default for AutocorrelationOptions {
    fn default() -> Self {
        Self {
            start: 1,
            lag: 1,
            indexing: PairIndexing::default(),
            sigma: SigmaForm::default(),
        }
    }
}

impl AutocorrelationOptions {
    pub fn new(start: usize, lag: usize) -> Self {
        Self {
            start,
            lag,
            ..Self::default()
        }
    }
}

pub fn autocorrelation_test(
    sample: &[f64],
    start: usize,
    lag: usize,
    alpha: f64,
) -> Result<TestReport> {
    autocorrelation_test_with(
        sample,
        &AutocorrelationOptions::new(start, lag),
        alpha,
        &StandardTables,
    )
}

/// Lag-`m` autocorrelation starting at element `i`.
///
/// `M` is the largest integer with `i + (M + 1) m <= N`; the estimate is
/// `rho = mean(R[i+km] R[i+(k+1)m], k = 0..=M) - 0.25` and `Z0 = rho / sigma`.
/// The verdict is two-sided.
pub fn autocorrelation_test_with(
    sample: &[f64],
    opts: &AutocorrelationOptions,
    alpha: f64,
    critical: &dyn CriticalValues,
) -> Result<TestReport> {
    let n = sample.len();
    let (i, m) = (opts.start, opts.lag);
    if i == 0 || m == 0 {
        return Err(Error::param("start and lag must be at least 1"));
    }
    // need M >= 1, i.e. i + 2m <= N
    if i + 2 * m > n {
        return Err(Error::SampleTooSmall {
            needed: i + 2 * m,
            got: n,
        });
    }
    let big_m = (n - i) / m - 1;
    let first_step = match opts.indexing {
        PairIndexing::Lag => m,
        PairIndexing::Printed => big_m,
    };
    let last_first = i + big_m * first_step;
    if last_first > n {
        return Err(Error::SampleTooSmall {
            needed: last_first,
            got: n,
        });
    }
    let sum: f64 = (0..=big_m)
        .map(|k| sample[i + k * first_step - 1] * sample[i + (k + 1) * m - 1])
        .sum();
    let rho = sum / (big_m + 1) as f64 - 0.25;
    let sigma = opts.sigma.sigma(big_m);
    let z0 = rho / sigma;
    let crit = critical.z_two_sided(alpha)?;
    Ok(
        TestReport::new(TestKind::Autocorrelation, z0.abs(), crit, alpha, n)
            .detail("rho", rho)
            .detail("sigma", sigma)
            .detail("z0", z0)
            .detail("big_m", big_m as f64)
            .detail("lag", m as f64)
            .detail("start", i as f64),
    )
}

pub fn circular_correlation_test(
    x: &[f64],
    y: &[f64],
    lag: usize,
    alpha: f64,
) -> Result<TestReport> {
    circular_correlation_test_with(x, y, lag, alpha, &StandardTables)
}

/// `rho = (1/N) sum x[k] y[(k - lag) mod N] - 0.25`, scaled by
/// `sqrt((13N + 7) / (12(N + 1)))`.
pub fn circular_correlation_test_with(
    x: &[f64],
    y: &[f64],
    lag: usize,
    alpha: f64,
    critical: &dyn CriticalValues,
) -> Result<TestReport> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let n = x.len();
    if n < 2 {
        return Err(Error::SampleTooSmall { needed: 2, got: n });
    }
    if lag >= n {
        return Err(Error::param(format!("lag {lag} must be below {n}")));
    }
    let sum: f64 = (0..n).map(|k| x[k] * y[(k + n - lag) % n]).sum();
    let rho = sum / n as f64 - 0.25;
    let nf = n as f64;
    let sigma = ((13.0 * nf + 7.0) / (12.0 * (nf + 1.0))).sqrt();
    let z0 = rho / sigma;
    let crit = critical.z_two_sided(alpha)?;
    Ok(
        TestReport::new(TestKind::Circular, z0.abs(), crit, alpha, n)
            .detail("rho", rho)
            .detail("sigma", sigma)
            .detail("z0", z0)
            .detail("lag", lag as f64),
    )
}
