use super::critical::{CriticalValues, StandardTables};
use super::{TestKind, TestReport};
use crate::error::{Error, Result};

fn check_unit(sample: &[f64]) -> Result<()> {
    match sample.iter().find(|v| !(0.0..1.0).contains(*v)) {
        Some(&value) => Err(Error::Range {
            value,
            lower: 0.0,
            upper: 1.0,
        }),
        None => Ok(()),
    }
}

/// `(D+, D-)` against the uniform CDF on `[0, 1)`.
pub fn ks_statistics(sample: &[f64]) -> (f64, f64) {
    let mut sorted = sample.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let mut d_plus = f64::NEG_INFINITY;
    let mut d_minus = f64::NEG_INFINITY;
    for (i, &r) in sorted.iter().enumerate() {
        d_plus = d_plus.max((i + 1) as f64 / n - r);
        d_minus = d_minus.max(r - i as f64 / n);
    }
    (d_plus, d_minus)
}

pub fn ks_test(sample: &[f64], alpha: f64) -> Result<TestReport> {
    ks_test_with(sample, alpha, &StandardTables)
}

pub fn ks_test_with(
    sample: &[f64],
    alpha: f64,
    critical: &dyn CriticalValues,
) -> Result<TestReport> {
    if sample.len() < 5 {
        return Err(Error::SampleTooSmall {
            needed: 5,
            got: sample.len(),
        });
    }
    check_unit(sample)?;
    let (d_plus, d_minus) = ks_statistics(sample);
    let d = d_plus.max(d_minus);
    let crit = critical.ks(sample.len(), alpha)?;
    Ok(TestReport::new(TestKind::Ks, d, crit, alpha, sample.len())
        .detail("d_plus", d_plus)
        .detail("d_minus", d_minus))
}

pub fn chi2_test(sample: &[f64], classes: usize, alpha: f64) -> Result<TestReport> {
    chi2_test_with(sample, classes, alpha, &StandardTables)
}

/// Equal-width chi-square goodness of fit on `[0, 1)`.
///
/// The statistic is accumulated as the integer `sum (F_i * k - N)^2` and
/// divided once by `N * k`, so it is the correctly rounded value of the
/// exact rational.
pub fn chi2_test_with(
    sample: &[f64],
    classes: usize,
    alpha: f64,
    critical: &dyn CriticalValues,
) -> Result<TestReport> {
    if classes < 2 {
        return Err(Error::param(format!(
            "need at least 2 classes, got {classes}"
        )));
    }
    let needed = 5 * classes;
    if sample.len() < needed {
        return Err(Error::SampleTooSmall {
            needed,
            got: sample.len(),
        });
    }
    check_unit(sample)?;
    let mut counts = vec![0u64; classes];
    for &v in sample {
        let bin = ((v * classes as f64) as usize).min(classes - 1);
        counts[bin] += 1;
    }
    let n = sample.len() as i128;
    let k = classes as i128;
    let numerator: u128 = counts
        .iter()
        .map(|&f| (f as i128 * k - n).unsigned_abs().pow(2))
        .sum();
    let statistic = numerator as f64 / (n * k) as f64;
    let dof = classes - 1;
    let crit = critical.chi2(dof, alpha)?;
    Ok(
        TestReport::new(TestKind::Chi2, statistic, crit, alpha, sample.len())
            .detail("nu", dof as f64)
            .detail("expected_per_class", sample.len() as f64 / classes as f64),
    )
}
