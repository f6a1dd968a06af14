//! The table of mathematical constants that seeds are mapped onto.
//!
//! The canonical table holds fourteen constants at six-decimal precision.
//! A seed `s` selects the multiplier `table[s % len]` and the increment
//! `table[(s + len / 2) % len]`; with fourteen distinct entries the two
//! indices never coincide, so the derived pair always has `a != c`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Canonical constants in seed-index order.
///
/// | idx | value    | constant                        |
/// |-----|----------|---------------------------------|
/// | 0   | 4.669202 | Feigenbaum delta                |
/// | 1   | 3.359886 | reciprocal Fibonacci constant   |
/// | 2   | 3.275823 | Levy's constant                 |
/// | 3   | 2.807770 | Fransen-Robinson constant       |
/// | 4   | 2.685452 | Khinchin's constant             |
/// | 5   | 2.584982 | Sierpinski's constant           |
/// | 6   | 2.502908 | Feigenbaum alpha                |
/// | 7   | 2.295587 | universal parabolic constant    |
/// | 8   | 1.902161 | Brun's constant                 |
/// | 9   | 1.705211 | Niven's constant                |
/// | 10  | 1.324718 | plastic number                  |
/// | 11  | 1.618034 | golden ratio                    |
/// | 12  | 3.141593 | pi                              |
/// | 13  | 2.718282 | e                               |
#[allow(clippy::approx_constant)]
pub const CANONICAL: [f64; 14] = [
    4.669202, 3.359886, 3.275823, 2.807770, 2.685452, 2.584982, 2.502908, 2.295587, 1.902161,
    1.705211, 1.324718, 1.618034, 3.141593, 2.718282,
];

/// The same constants as [`CANONICAL`] at full double precision.
pub const FULL_PRECISION: [f64; 14] = [
    4.669_201_609_102_99,
    3.359_885_666_243_177,
    3.275_822_918_721_811,
    2.807_770_242_028_519,
    2.685_452_001_065_306,
    2.584_981_759_579_253,
    2.502_907_875_095_892,
    2.295_587_149_392_638,
    1.902_160_583_104,
    1.705_211_140_105_367,
    1.324_717_957_244_746,
    1.618_033_988_749_895,
    std::f64::consts::PI,
    std::f64::consts::E,
];

/// Ordered list of positive, pairwise distinct constants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ConstantTable {
    values: Vec<f64>,
}

impl Default for ConstantTable {
    fn default() -> Self {
        Self::canonical()
    }
}

impl ConstantTable {
    pub fn canonical() -> Self {
        Self {
            values: CANONICAL.to_vec(),
        }
    }

    pub fn full_precision() -> Self {
        Self {
            values: FULL_PRECISION.to_vec(),
        }
    }

    /// Builds a custom table. Requires at least two finite, strictly
    /// positive, pairwise distinct values.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::param("constant table needs at least 2 entries"));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite() || **v <= 0.0) {
            return Err(Error::param(format!(
                "constant table entries must be finite and positive, got {v}"
            )));
        }
        for (i, a) in values.iter().enumerate() {
            if values[i + 1..].contains(a) {
                return Err(Error::param(format!("duplicate constant {a}")));
            }
        }
        Ok(Self { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Entry at `index % len`.
    pub fn at(&self, index: u64) -> f64 {
        self.values[(index % self.values.len() as u64) as usize]
    }

    /// Offset between the multiplier and increment indices (`floor(len / 2)`).
    pub fn half(&self) -> u64 {
        (self.values.len() / 2) as u64
    }

    /// Maps a seed to its `(a, c)` pair.
    pub fn derive(&self, seed: u64) -> (f64, f64) {
        let a = self.at(seed);
        let c = self.at(seed % self.len() as u64 + self.half());
        (a, c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.values).expect("f64 vector serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let values: Vec<f64> = serde_json::from_str(text)?;
        Self::new(values)
    }
}

impl TryFrom<Vec<f64>> for ConstantTable {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<ConstantTable> for Vec<f64> {
    fn from(table: ConstantTable) -> Self {
        table.values
    }
}

/// `(a, c)` for `seed` under `table`.
pub fn derive_constants(seed: u64, table: &ConstantTable) -> (f64, f64) {
    table.derive(seed)
}
