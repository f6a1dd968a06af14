//! Node deployments in a square area, with and without the four-quadrant
//! grid construction.
//!
//! Both coordinate streams start from the seed. The X stream uses the
//! derived increment `c`; the Y stream uses `a` as its increment unless
//! [`YIncrement::C`] is selected.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constants::ConstantTable;
use crate::error::{Error, Result};
use crate::generator::{step_with, GeneratorParams};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (dx * dx + dy * dy).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    NonGrid,
    Grid,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::NonGrid => "non-grid",
            Mode::Grid => "grid",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "non-grid" | "nongrid" => Ok(Mode::NonGrid),
            "grid" => Ok(Mode::Grid),
            other => Err(Error::param(format!("unknown deployment mode {other:?}"))),
        }
    }
}

/// Increment used by the Y recurrence.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum YIncrement {
    /// `Y[i] = (a * Y[i-1] + a) mod m`
    #[default]
    A,
    /// `Y[i] = (a * Y[i-1] + c) mod m`
    C,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Deployment {
    pub points: Vec<Point>,
    pub area_width: f64,
    pub area_height: f64,
    pub mode: Mode,
    pub seed: u64,
    pub params: GeneratorParams,
    pub y_increment: YIncrement,
}

impl Deployment {
    pub fn node_count(&self) -> usize {
        self.points.len()
    }

    pub fn xs(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.x).collect()
    }

    pub fn ys(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.y).collect()
    }

    /// Half the area side; the quadrant size in grid mode.
    pub fn quadrant_side(&self) -> f64 {
        self.area_width / 2.0
    }
}

/// Generation options beyond `(node_count, area, seed)`.
#[derive(Debug, Clone, Default)]
pub struct Deployer {
    pub table: ConstantTable,
    pub y_increment: YIncrement,
    /// Replaces the seed-derived `(a, c)`; `a == c` is permitted here.
    pub constants: Option<(f64, f64)>,
    /// Rescales Y from `[0, area)` to `[0, height)` after generation.
    pub height: Option<f64>,
}

impl Deployer {
    pub fn generate(
        &self,
        mode: Mode,
        node_count: usize,
        area: f64,
        seed: u64,
    ) -> Result<Deployment> {
        check_inputs(node_count, area)?;
        let modulus = match mode {
            Mode::NonGrid => area,
            Mode::Grid => area / 2.0,
        };
        let params = self.params(seed, modulus)?;
        let mut points = match mode {
            Mode::NonGrid => walk(&params, self.y_increment, node_count),
            Mode::Grid => grid_points(&params, self.y_increment, node_count),
        };
        let mut area_height = area;
        if let Some(h) = self.height {
            if !(h > 0.0 && h.is_finite()) {
                return Err(Error::param(format!(
                    "area height must be positive, got {h}"
                )));
            }
            let scale = h / area;
            let top = h.next_down();
            for p in &mut points {
                p.y = (p.y * scale).min(top);
            }
            area_height = h;
        }
        Ok(Deployment {
            points,
            area_width: area,
            area_height,
            mode,
            seed,
            params,
            y_increment: self.y_increment,
        })
    }

    fn params(&self, seed: u64, modulus: f64) -> Result<GeneratorParams> {
        match self.constants {
            Some((a, c)) => GeneratorParams::degenerate(seed as f64, a, c, modulus),
            None => GeneratorParams::derive(seed, modulus, &self.table),
        }
    }
}

fn check_inputs(node_count: usize, area: f64) -> Result<()> {
    if node_count == 0 {
        return Err(Error::param("node count must be at least 1"));
    }
    if !(area > 0.0 && area.is_finite()) {
        return Err(Error::param(format!("area must be positive, got {area}")));
    }
    Ok(())
}

/// Runs the paired X/Y recurrences for `count` steps.
fn walk(params: &GeneratorParams, y_increment: YIncrement, count: usize) -> Vec<Point> {
    let y_inc = match y_increment {
        YIncrement::A => params.a,
        YIncrement::C => params.c,
    };
    let (mut x, mut y) = (params.seed, params.seed);
    (0..count)
        .map(|_| {
            x = step_with(x, params.a, params.c, params.modulus);
            y = step_with(y, params.a, y_inc, params.modulus);
            Point::new(x, y)
        })
        .collect()
}

/// Base block in the lower-left quadrant, then the three translated copies.
/// When `count` is not a multiple of four the last block is truncated.
fn grid_points(params: &GeneratorParams, y_increment: YIncrement, count: usize) -> Vec<Point> {
    let side = params.modulus;
    let base = walk(params, y_increment, count.div_ceil(4));
    let shifts = [(0.0, 0.0), (side, side), (side, 0.0), (0.0, side)];
    shifts
        .iter()
        .flat_map(|&(dx, dy)| base.iter().map(move |p| Point::new(p.x + dx, p.y + dy)))
        .take(count)
        .collect()
}

pub fn deploy_nongrid(node_count: usize, area: f64, seed: u64) -> Result<Deployment> {
    Deployer::default().generate(Mode::NonGrid, node_count, area, seed)
}

pub fn deploy_grid(node_count: usize, area: f64, seed: u64) -> Result<Deployment> {
    Deployer::default().generate(Mode::Grid, node_count, area, seed)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn nongrid_first_point() {
        let d = deploy_nongrid(1, 100.0, 43).unwrap();
        // X: 3.359886 * 43 + 1.902161 = 146.377259
        // Y: 3.359886 * 43 + 3.359886 = 147.834984
        assert!((d.points[0].x - 46.377259).abs() < 1e-5);
        assert!((d.points[0].y - 47.834984).abs() < 1e-5);
        assert_eq!(d.params.a, 3.359886);
        assert_eq!(d.params.c, 1.902161);
    }

    #[test]
    fn nongrid_seed_zero() {
        let d = deploy_nongrid(3, 100.0, 0).unwrap();
        assert!((d.points[0].x - 2.295587).abs() < 1e-12);
        let x2 = (4.669202 * d.points[0].x + 2.295587) % 100.0;
        assert!((d.points[1].x - x2).abs() < 1e-12);
    }

    #[test]
    fn grid_four_nodes() {
        let d = deploy_grid(4, 100.0, 43).unwrap();
        // 146.377259 mod 50 and 147.834984 mod 50
        let p = d.points[0];
        assert!((p.x - 46.377259).abs() < 1e-5);
        assert!((p.y - 47.834984).abs() < 1e-5);
        assert_eq!(d.points[1], Point::new(p.x + 50.0, p.y + 50.0));
        assert_eq!(d.points[2], Point::new(p.x + 50.0, p.y));
        assert_eq!(d.points[3], Point::new(p.x, p.y + 50.0));
    }

    #[test]
    fn grid_remainder_truncates_last_block() {
        let d = deploy_grid(10, 100.0, 7).unwrap();
        assert_eq!(d.node_count(), 10);
        // ceil(10 / 4) = 3 base points; blocks of 3, 3, 3, 1
        let base = &d.points[..3];
        assert_eq!(d.points[9], Point::new(base[0].x, base[0].y + 50.0));
        let small = deploy_grid(1, 100.0, 7).unwrap();
        assert_eq!(small.node_count(), 1);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(deploy_nongrid(0, 100.0, 1).is_err());
        assert!(deploy_grid(4, 0.0, 1).is_err());
        assert!(deploy_nongrid(4, -3.0, 1).is_err());
        assert!(deploy_nongrid(4, f64::NAN, 1).is_err());
    }

    #[test]
    fn degenerate_constants_lie_on_diagonal() {
        let dep = Deployer {
            constants: Some((2.584982, 2.584982)),
            ..Deployer::default()
        };
        for mode in [Mode::NonGrid, Mode::Grid] {
            let d = dep.generate(mode, 101, 100.0, 43).unwrap();
            let base = match mode {
                Mode::NonGrid => &d.points[..],
                Mode::Grid => &d.points[..26],
            };
            assert!(base.iter().all(|p| p.x == p.y));
        }
        assert!(GeneratorParams::new(1.0, 2.0, 2.0, 3.0).is_err());
    }

    #[test]
    fn symmetric_y_increment_variant() {
        let dep = Deployer {
            y_increment: YIncrement::C,
            ..Deployer::default()
        };
        let d = dep.generate(Mode::NonGrid, 5, 100.0, 43).unwrap();
        assert!(d.points.iter().all(|p| p.x == p.y));
    }

    #[test]
    fn rectangular_scaling() {
        let dep = Deployer {
            height: Some(50.0),
            ..Deployer::default()
        };
        let d = dep.generate(Mode::NonGrid, 50, 100.0, 43).unwrap();
        let square = deploy_nongrid(50, 100.0, 43).unwrap();
        assert_eq!(d.area_height, 50.0);
        for (r, s) in d.points.iter().zip(&square.points) {
            assert_eq!(r.x, s.x);
            assert!((r.y - s.y * 0.5).abs() < 1e-12);
            assert!(r.y < 50.0);
        }
    }

    proptest! {
        #[test]
        fn coordinates_stay_in_area(
            seed in 0u64..1_000_000,
            n in 1usize..300,
            area in 1.0f64..1000.0,
            grid in any::<bool>(),
        ) {
            let mode = if grid { Mode::Grid } else { Mode::NonGrid };
            let d = Deployer::default().generate(mode, n, area, seed).unwrap();
            prop_assert_eq!(d.node_count(), n);
            let upper = match mode {
                Mode::NonGrid => area,
                Mode::Grid => 2.0 * (area / 2.0),
            };
            for p in &d.points {
                prop_assert!(p.x >= 0.0 && p.x < upper);
                prop_assert!(p.y >= 0.0 && p.y < upper);
            }
            let again = Deployer::default().generate(mode, n, area, seed).unwrap();
            prop_assert_eq!(d, again);
        }
    }
}
