//! Real-valued congruential recurrence `x <- (a * x + c) mod m`.
//!
//! All arithmetic is IEEE-754 double precision and the remainder is
//! `x - floor(x / m) * m`, so streams are bit-identical on any conforming
//! platform.

use serde::{Deserialize, Serialize};

use crate::constants::ConstantTable;
use crate::error::{Error, Result};

/// Remainder of `x` by `m` in `[0, m)`.
pub fn real_mod(x: f64, m: f64) -> f64 {
    let mut r = x - (x / m).floor() * m;
    if r < 0.0 {
        r += m;
    }
    if r >= m {
        r = m.next_down();
    }
    r
}

/// Everything needed to regenerate a stream.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorParams {
    /// Initial state `X[0]`.
    pub seed: f64,
    pub a: f64,
    pub c: f64,
    pub modulus: f64,
}

impl GeneratorParams {
    /// Validated constructor. `a == c` is rejected; see [`Self::degenerate`].
    pub fn new(seed: f64, a: f64, c: f64, modulus: f64) -> Result<Self> {
        if a == c {
            return Err(Error::param(format!(
                "multiplier and increment must differ (a = c = {a})"
            )));
        }
        Self::degenerate(seed, a, c, modulus)
    }

    /// Like [`Self::new`] but allows `a == c`.
    pub fn degenerate(seed: f64, a: f64, c: f64, modulus: f64) -> Result<Self> {
        if !(modulus > 0.0 && modulus.is_finite()) {
            return Err(Error::param(format!(
                "modulus must be positive, got {modulus}"
            )));
        }
        if !seed.is_finite() || seed < 0.0 {
            return Err(Error::param(format!(
                "seed must be non-negative, got {seed}"
            )));
        }
        if !a.is_finite() || !c.is_finite() {
            return Err(Error::param("constants must be finite"));
        }
        Ok(Self {
            seed,
            a,
            c,
            modulus,
        })
    }

    /// Seed-derived constants from `table`.
    pub fn derive(seed: u64, modulus: f64, table: &ConstantTable) -> Result<Self> {
        let (a, c) = table.derive(seed);
        Self::new(seed as f64, a, c, modulus)
    }

    pub fn step(&self, x: f64) -> f64 {
        lcg_step(x, self)
    }

    pub fn iter(&self) -> Stream {
        Stream::new(*self)
    }
}

/// One step of the recurrence.
pub fn lcg_step(x: f64, params: &GeneratorParams) -> f64 {
    step_with(x, params.a, params.c, params.modulus)
}

/// `(mul * x + inc) mod m`, shared by recurrences that vary the increment.
pub(crate) fn step_with(x: f64, mul: f64, inc: f64, m: f64) -> f64 {
    real_mod(mul * x + inc, m)
}

/// Unbounded iterator over the stream, starting after `X[0]`.
#[derive(Debug, Clone)]
pub struct Stream {
    params: GeneratorParams,
    state: f64,
}

impl Stream {
    pub fn new(params: GeneratorParams) -> Self {
        Self {
            state: params.seed,
            params,
        }
    }

    pub fn state(&self) -> f64 {
        self.state
    }
}

impl Iterator for Stream {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        self.state = lcg_step(self.state, &self.params);
        Some(self.state)
    }
}

/// First `count` elements of the stream.
pub fn stream(params: &GeneratorParams, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::param("stream count must be at least 1"));
    }
    Ok(params.iter().take(count).collect())
}
