//! Per-node packet-size matrices bounded by `[p_min, p_max)`.
//!
//! Three regimes are available:
//!
//! * `uniform`: the scalar recurrence `x <- (a * (a * x + c)) mod w + p_min`
//!   with `w = p_max - p_min`, carried across node rows.
//! * `exp-transform`: the same stream mapped through the inverse
//!   exponential CDF, `(-ln(1 - x / p_max) / rate) mod w + p_min`.
//! * `exp-recurrence`: a `t x t` working table filled along diagonals,
//!   `X[i % t][j % t] = (a * X[(i-1) % t][(j-1) % t] + c) mod w + p_min`.
//!
//! The first two share the seed `X0 = table[floor(p_max)]` with `a` and `c`
//! derived from `floor(X0)`. The diagonal recurrence takes `a` from
//! `floor(p_min)` instead.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constants::ConstantTable;
use crate::error::{Error, Result};
use crate::generator::{real_mod, GeneratorParams};

/// Arguments of `ln` at or below this are clamped to it.
pub const LOG_GUARD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Distribution {
    Uniform,
    #[serde(rename = "exp-transform")]
    ExponentialTransform,
    #[serde(rename = "exp-recurrence")]
    ExponentialRecurrence,
}

impl Distribution {
    pub fn as_str(&self) -> &'static str {
        match self {
            Distribution::Uniform => "uniform",
            Distribution::ExponentialTransform => "exp-transform",
            Distribution::ExponentialRecurrence => "exp-recurrence",
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Distribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(Distribution::Uniform),
            "exp-transform" => Ok(Distribution::ExponentialTransform),
            "exp-recurrence" => Ok(Distribution::ExponentialRecurrence),
            other => Err(Error::param(format!("unknown distribution {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrafficMatrix {
    /// Row per node, column per time slot.
    pub values: Vec<Vec<f64>>,
    pub p_min: f64,
    pub p_max: f64,
    pub distribution: Distribution,
    /// Only meaningful for `exp-transform`.
    pub rate: Option<f64>,
    pub params: GeneratorParams,
}

impl TrafficMatrix {
    pub fn node_count(&self) -> usize {
        self.values.len()
    }

    pub fn slot_count(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    /// Entries in generation (row-major) order.
    pub fn flatten(&self) -> Vec<f64> {
        self.values.iter().flatten().copied().collect()
    }

    pub fn column(&self, slot: usize) -> Vec<f64> {
        self.values.iter().map(|row| row[slot]).collect()
    }
}

#[derive(Debug, Clone, Default)]
pub struct TrafficGenerator {
    pub table: ConstantTable,
    /// Restart the uniform stream from `X0` at every node row.
    pub reseed_per_node: bool,
    /// Accept `a == c` in the diagonal recurrence.
    pub allow_equal_constants: bool,
}

impl TrafficGenerator {
    pub fn generate(
        &self,
        distribution: Distribution,
        nodes: usize,
        slots: usize,
        p_min: f64,
        p_max: f64,
        rate: f64,
    ) -> Result<TrafficMatrix> {
        match distribution {
            Distribution::Uniform => self.uniform(nodes, slots, p_min, p_max),
            Distribution::ExponentialTransform => {
                self.exponential_transform(nodes, slots, p_min, p_max, rate)
            }
            Distribution::ExponentialRecurrence => {
                self.exponential_recurrence(nodes, slots, p_min, p_max)
            }
        }
    }

    fn uniform_params(&self, p_min: f64, p_max: f64) -> Result<GeneratorParams> {
        let x0 = self.table.at(p_max.floor() as u64);
        let (a, c) = self.table.derive(x0.floor() as u64);
        GeneratorParams::new(x0, a, c, p_max - p_min)
    }

    /// Runs the uniform stream, handing each `(row, value)` to `emit`.
    fn uniform_walk(
        &self,
        params: &GeneratorParams,
        nodes: usize,
        slots: usize,
        p_min: f64,
        p_max: f64,
        mut emit: impl FnMut(f64) -> f64,
    ) -> Vec<Vec<f64>> {
        let mut x = params.seed;
        (0..nodes)
            .map(|_| {
                if self.reseed_per_node {
                    x = params.seed;
                }
                (0..slots)
                    .map(|_| {
                        let inner = params.a * x + params.c;
                        x = lift(real_mod(params.a * inner, params.modulus), p_min, p_max);
                        emit(x)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn uniform(
        &self,
        nodes: usize,
        slots: usize,
        p_min: f64,
        p_max: f64,
    ) -> Result<TrafficMatrix> {
        check_shape(nodes, slots, p_min, p_max)?;
        let params = self.uniform_params(p_min, p_max)?;
        let values = self.uniform_walk(&params, nodes, slots, p_min, p_max, |x| x);
        Ok(TrafficMatrix {
            values,
            p_min,
            p_max,
            distribution: Distribution::Uniform,
            rate: None,
            params,
        })
    }

    pub fn exponential_transform(
        &self,
        nodes: usize,
        slots: usize,
        p_min: f64,
        p_max: f64,
        rate: f64,
    ) -> Result<TrafficMatrix> {
        check_shape(nodes, slots, p_min, p_max)?;
        check_rate(rate)?;
        let params = self.uniform_params(p_min, p_max)?;
        let values = self.uniform_walk(&params, nodes, slots, p_min, p_max, |x| {
            exp_map(x, p_min, p_max, rate)
        });
        Ok(TrafficMatrix {
            values,
            p_min,
            p_max,
            distribution: Distribution::ExponentialTransform,
            rate: Some(rate),
            params,
        })
    }

    pub fn exponential_recurrence(
        &self,
        nodes: usize,
        slots: usize,
        p_min: f64,
        p_max: f64,
    ) -> Result<TrafficMatrix> {
        check_shape(nodes, slots, p_min, p_max)?;
        let x0 = self.table.at(p_max.floor() as u64);
        let a = self.table.at(p_min.floor() as u64);
        let c = self
            .table
            .at((x0.floor() as u64) % self.table.len() as u64 + self.table.half());
        let width = p_max - p_min;
        let params = if self.allow_equal_constants {
            GeneratorParams::degenerate(x0, a, c, width)?
        } else {
            GeneratorParams::new(x0, a, c, width).map_err(|_| {
                Error::param(format!(
                    "p_min = {p_min} and p_max = {p_max} select equal constants a = c = {a}"
                ))
            })?
        };

        let mut work = vec![vec![0.0; slots]; slots];
        work[0][0] = x0;
        let values = (1..=nodes)
            .map(|i| {
                (1..=slots)
                    .map(|j| {
                        let prev = work[(i - 1) % slots][(j - 1) % slots];
                        let v = lift(real_mod(a * prev + c, width), p_min, p_max);
                        work[i % slots][j % slots] = v;
                        v
                    })
                    .collect()
            })
            .collect();
        Ok(TrafficMatrix {
            values,
            p_min,
            p_max,
            distribution: Distribution::ExponentialRecurrence,
            rate: None,
            params,
        })
    }
}

/// Shifts a remainder in `[0, p_max - p_min)` up to `[p_min, p_max)`.
fn lift(r: f64, p_min: f64, p_max: f64) -> f64 {
    (r + p_min).min(p_max.next_down())
}

/// `(-ln(1 - x / p_max) / rate) mod (p_max - p_min) + p_min`.
pub fn exp_map(x: f64, p_min: f64, p_max: f64, rate: f64) -> f64 {
    let arg = (1.0 - x / p_max).max(LOG_GUARD);
    let y = -arg.ln() / rate;
    lift(real_mod(y, p_max - p_min), p_min, p_max)
}

fn check_shape(nodes: usize, slots: usize, p_min: f64, p_max: f64) -> Result<()> {
    if nodes == 0 || slots == 0 {
        return Err(Error::param("node and slot counts must be at least 1"));
    }
    if !(p_min.is_finite() && p_max.is_finite()) || p_min < 0.0 {
        return Err(Error::param(format!(
            "packet bounds must be finite with p_min >= 0, got [{p_min}, {p_max})"
        )));
    }
    if p_max <= p_min {
        return Err(Error::param(format!(
            "p_max ({p_max}) must exceed p_min ({p_min})"
        )));
    }
    Ok(())
}

fn check_rate(rate: f64) -> Result<()> {
    if rate > 0.0 && rate.is_finite() {
        Ok(())
    } else {
        Err(Error::param(format!("rate must be positive, got {rate}")))
    }
}

pub fn traffic_uniform(
    nodes: usize,
    slots: usize,
    p_min: f64,
    p_max: f64,
) -> Result<TrafficMatrix> {
    TrafficGenerator::default().uniform(nodes, slots, p_min, p_max)
}

pub fn traffic_exponential_transform(
    nodes: usize,
    slots: usize,
    p_min: f64,
    p_max: f64,
    rate: f64,
) -> Result<TrafficMatrix> {
    TrafficGenerator::default().exponential_transform(nodes, slots, p_min, p_max, rate)
}

pub fn traffic_exponential_recurrence(
    nodes: usize,
    slots: usize,
    p_min: f64,
    p_max: f64,
) -> Result<TrafficMatrix> {
    TrafficGenerator::default().exponential_recurrence(nodes, slots, p_min, p_max)
}

/// Inverse exponential CDF: `-ln(1 - r) / rate` for `r` in `[0, 1)`.
pub fn exp_inverse_transform(r: f64, rate: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("uniform variate {r} outside [0, 1)")));
    }
    check_rate(rate)?;
    Ok(-(-r).ln_1p() / rate)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinExponentials {
    /// Reciprocal of the mean observed minimum.
    pub empirical_rate: f64,
    /// Fraction of draws in which each variable was the minimum.
    pub selection_freqs: Vec<f64>,
}

/// Monte-Carlo check of the minimum of independent exponentials.
///
/// The minimum of `Exp(rate_k)` variables is `Exp(sum rate_k)` and variable
/// `k` is the minimum with probability `rate_k / sum rate_k`.
pub fn min_exponentials_check<R: Rng + ?Sized>(
    rates: &[f64],
    samples: usize,
    rng: &mut R,
) -> Result<MinExponentials> {
    if rates.len() < 2 {
        return Err(Error::param("need at least two rates"));
    }
    for &rate in rates {
        check_rate(rate)?;
    }
    if samples < 1000 {
        return Err(Error::SampleTooSmall {
            needed: 1000,
            got: samples,
        });
    }
    let mut wins = vec![0usize; rates.len()];
    let mut total = 0.0;
    for _ in 0..samples {
        let mut best = (0, f64::INFINITY);
        for (k, &rate) in rates.iter().enumerate() {
            let v = exp_inverse_transform(rng.gen::<f64>(), rate)?;
            if v < best.1 {
                best = (k, v);
            }
        }
        wins[best.0] += 1;
        total += best.1;
    }
    Ok(MinExponentials {
        empirical_rate: samples as f64 / total,
        selection_freqs: wins.iter().map(|&w| w as f64 / samples as f64).collect(),
    })
}

/// [`min_exponentials_check`] over a seeded ChaCha8 stream.
pub fn min_exponentials_check_seeded(
    rates: &[f64],
    samples: usize,
    seed: u64,
) -> Result<MinExponentials> {
    min_exponentials_check(rates, samples, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn inverse_transform_values() {
        assert_eq!(exp_inverse_transform(0.0, 1.0).unwrap(), 0.0);
        assert!((exp_inverse_transform(0.5, 1.0).unwrap() - std::f64::consts::LN_2).abs() < 1e-12);
        assert!(
            (exp_inverse_transform(0.5, 2.0).unwrap() - std::f64::consts::LN_2 / 2.0).abs() < 1e-12
        );
        assert!(matches!(
            exp_inverse_transform(1.0, 1.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            exp_inverse_transform(-0.1, 1.0),
            Err(Error::Domain(_))
        ));
        assert!(exp_inverse_transform(0.5, 0.0).is_err());
    }

    #[test]
    fn uniform_smallest_case() {
        let m = traffic_uniform(1, 1, 2.0, 10.0).unwrap();
        assert_eq!((m.node_count(), m.slot_count()), (1, 1));
        let v = m.values[0][0];
        assert!((2.0..10.0).contains(&v));
        // X0 = table[10] = 1.324718, a = table[1], c = table[8]
        assert_eq!(m.params.seed, 1.324718);
        assert_eq!((m.params.a, m.params.c), (3.359886, 1.902161));
        let expect = (3.359886 * (3.359886 * 1.324718 + 1.902161)) % 8.0 + 2.0;
        assert!((v - expect).abs() < 1e-12);
    }

    #[test]
    fn uniform_state_carries_across_rows() {
        let m = traffic_uniform(3, 2, 2.0, 10.0).unwrap();
        let single = traffic_uniform(1, 6, 2.0, 10.0).unwrap();
        assert_eq!(m.flatten(), single.flatten());

        let gen = TrafficGenerator {
            reseed_per_node: true,
            ..TrafficGenerator::default()
        };
        let reseeded = gen.uniform(3, 2, 2.0, 10.0).unwrap();
        assert_eq!(reseeded.values[0], reseeded.values[2]);
    }

    #[test]
    fn transform_maps_uniform_stream() {
        let u = traffic_uniform(4, 5, 2.0, 10.0).unwrap();
        let e = traffic_exponential_transform(4, 5, 2.0, 10.0, 1.0).unwrap();
        for (ur, er) in u.values.iter().zip(&e.values) {
            for (x, y) in ur.iter().zip(er) {
                let expect = (-(1.0 - x / 10.0).ln()) % 8.0 + 2.0;
                assert!((y - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn zero_stream_value_maps_to_p_min() {
        assert_eq!(exp_map(0.0, 2.0, 10.0, 1.0), 2.0);
    }

    #[test]
    fn log_guard_near_upper_bound() {
        let v = exp_map(10.0f64.next_down(), 2.0, 10.0, 1.0);
        assert!(v.is_finite() && (2.0..10.0).contains(&v));
    }

    #[test]
    fn recurrence_first_entry() {
        let m = traffic_exponential_recurrence(80, 5, 2.0, 10.0).unwrap();
        assert_eq!(m.params.seed, 1.324718);
        assert_eq!((m.params.a, m.params.c), (3.275823, 1.902161));
        // 3.275823 * 1.324718 + 1.902161 = 6.241703 (< 8), + 2
        assert!((m.values[0][0] - 8.241703).abs() < 1e-5);
        // (0, 1) reads the untouched zero cell: c mod 8 + 2
        assert!((m.values[0][1] - 3.902161).abs() < 1e-12);
    }

    #[test]
    fn recurrence_equal_constants_needs_override() {
        // floor(p_min) = 8 and floor(table[10]) + 7 = 8 select the same entry
        assert!(traffic_exponential_recurrence(2, 2, 8.0, 10.0).is_err());
        let gen = TrafficGenerator {
            allow_equal_constants: true,
            ..TrafficGenerator::default()
        };
        assert!(gen.exponential_recurrence(2, 2, 8.0, 10.0).is_ok());
    }

    #[test]
    fn shape_errors() {
        assert!(traffic_uniform(0, 5, 2.0, 10.0).is_err());
        assert!(traffic_uniform(5, 0, 2.0, 10.0).is_err());
        assert!(traffic_uniform(5, 5, 10.0, 2.0).is_err());
        assert!(traffic_uniform(5, 5, 2.0, 2.0).is_err());
        assert!(traffic_exponential_transform(5, 5, 2.0, 10.0, -1.0).is_err());
    }

    #[test]
    fn min_exponentials_symmetric_and_rejects_single() {
        let r = min_exponentials_check_seeded(&[1.0, 1.0], 20_000, 1).unwrap();
        assert!((r.selection_freqs[0] - 0.5).abs() < 0.02);
        assert!(min_exponentials_check_seeded(&[5.0], 20_000, 1).is_err());
        assert!(min_exponentials_check_seeded(&[1.0, 2.0], 10, 1).is_err());
    }

    proptest! {
        #[test]
        fn entries_in_bounds_and_deterministic(
            nodes in 1usize..40,
            slots in 1usize..8,
            p_min in 0.0f64..50.0,
            width in 0.5f64..50.0,
            rate in 0.1f64..5.0,
            which in 0usize..3,
        ) {
            let p_max = p_min + width;
            let dist = [
                Distribution::Uniform,
                Distribution::ExponentialTransform,
                Distribution::ExponentialRecurrence,
            ][which];
            let gen = TrafficGenerator { allow_equal_constants: true, ..Default::default() };
            let m = gen.generate(dist, nodes, slots, p_min, p_max, rate).unwrap();
            prop_assert_eq!((m.node_count(), m.slot_count()), (nodes, slots));
            for v in m.flatten() {
                prop_assert!(v >= p_min && v < p_max, "{} not in [{}, {})", v, p_min, p_max);
            }
            let again = gen.generate(dist, nodes, slots, p_min, p_max, rate).unwrap();
            prop_assert_eq!(m, again);
        }
    }
}
