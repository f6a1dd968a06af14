use crate::error::{Error, Result};

/// Affine map of `[lower, upper)` onto `[0, 1)`.
pub fn normalize(sample: &[f64], lower: f64, upper: f64) -> Result<Vec<f64>> {
    if upper <= lower || !lower.is_finite() || !upper.is_finite() {
        return Err(Error::param(format!("invalid range [{lower}, {upper})")));
    }
    let width = upper - lower;
    let top = 1.0f64.next_down();
    sample
        .iter()
        .map(|&v| {
            if v >= lower && v < upper {
                Ok(((v - lower) / width).min(top))
            } else {
                Err(Error::Range {
                    value: v,
                    lower,
                    upper,
                })
            }
        })
        .collect()
}

/// The `index`-th contiguous quarter. Quarters have `len / 4` elements and
/// the last one absorbs the remainder.
pub fn subsample<T>(sample: &[T], index: usize) -> Result<&[T]> {
    if index > 3 {
        return Err(Error::param(format!("quarter index {index} outside 0..=3")));
    }
    if sample.len() < 4 {
        return Err(Error::SampleTooSmall {
            needed: 4,
            got: sample.len(),
        });
    }
    let q = sample.len() / 4;
    let start = index * q;
    let end = if index == 3 { sample.len() } else { start + q };
    Ok(&sample[start..end])
}
