//! Critical values for the supported significance levels.
//!
//! KS values for `n <= 35` are quantiles of the exact two-sided Kolmogorov
//! distribution; larger samples use `c(alpha) / sqrt(n)`. Chi-square values
//! are tabulated for `1..=100` degrees of freedom and extended with the
//! Wilson-Hilferty approximation.

use crate::error::{Error, Result};

/// Significance levels with embedded tables, in table-column order.
pub const SUPPORTED_ALPHAS: [f64; 3] = [0.05, 0.01, 0.001];

/// Asymptotic KS coefficients `c(alpha)` for `n > 35`.
pub const KS_ASYMPTOTIC: [f64; 3] = [1.36, 1.63, 1.95];

/// Two-sided standard normal quantiles `z_{alpha/2}`.
pub const Z_TWO_SIDED: [f64; 3] = [1.959_964, 2.575_829, 3.290_527];

/// One-sided standard normal quantiles `z_alpha`.
const Z_ONE_SIDED: [f64; 3] = [1.644_854, 2.326_348, 3.090_232];

pub const KS_EXACT_MAX_N: usize = 35;

#[rustfmt::skip]
const KS_TABLE: [[f64; 3]; KS_EXACT_MAX_N] = [
    [0.97500, 0.99500, 0.99950], // 1
    [0.84189, 0.92929, 0.97764], // 2
    [0.70760, 0.82900, 0.92063], // 3
    [0.62394, 0.73424, 0.85047], // 4
    [0.56328, 0.66853, 0.78137], // 5
    [0.51926, 0.61661, 0.72479], // 6
    [0.48342, 0.57581, 0.67930], // 7
    [0.45427, 0.54179, 0.64098], // 8
    [0.43001, 0.51332, 0.60846], // 9
    [0.40925, 0.48893, 0.58042], // 10
    [0.39122, 0.46770, 0.55588], // 11
    [0.37543, 0.44905, 0.53422], // 12
    [0.36143, 0.43247, 0.51490], // 13
    [0.34890, 0.41762, 0.49753], // 14
    [0.33760, 0.40420, 0.48182], // 15
    [0.32733, 0.39201, 0.46750], // 16
    [0.31796, 0.38086, 0.45440], // 17
    [0.30936, 0.37062, 0.44234], // 18
    [0.30143, 0.36117, 0.43119], // 19
    [0.29408, 0.35241, 0.42085], // 20
    [0.28724, 0.34426, 0.41122], // 21
    [0.28087, 0.33666, 0.40223], // 22
    [0.27490, 0.32954, 0.39380], // 23
    [0.26931, 0.32286, 0.38588], // 24
    [0.26404, 0.31657, 0.37843], // 25
    [0.25907, 0.31063, 0.37139], // 26
    [0.25438, 0.30502, 0.36473], // 27
    [0.24993, 0.29971, 0.35842], // 28
    [0.24571, 0.29466, 0.35242], // 29
    [0.24170, 0.28986, 0.34672], // 30
    [0.23788, 0.28529, 0.34129], // 31
    [0.23424, 0.28094, 0.33611], // 32
    [0.23076, 0.27677, 0.33115], // 33
    [0.22743, 0.27279, 0.32641], // 34
    [0.22425, 0.26897, 0.32187], // 35
];

pub const CHI2_TABLE_MAX_DOF: usize = 100;

#[rustfmt::skip]
const CHI2_TABLE: [[f64; 3]; CHI2_TABLE_MAX_DOF] = [
    [3.8415, 6.6349, 10.8276], // 1
    [5.9915, 9.2103, 13.8155], // 2
    [7.8147, 11.3449, 16.2662], // 3
    [9.4877, 13.2767, 18.4668], // 4
    [11.0705, 15.0863, 20.5150], // 5
    [12.5916, 16.8119, 22.4577], // 6
    [14.0671, 18.4753, 24.3219], // 7
    [15.5073, 20.0902, 26.1245], // 8
    [16.9190, 21.6660, 27.8772], // 9
    [18.3070, 23.2093, 29.5883], // 10
    [19.6751, 24.7250, 31.2641], // 11
    [21.0261, 26.2170, 32.9095], // 12
    [22.3620, 27.6882, 34.5282], // 13
    [23.6848, 29.1412, 36.1233], // 14
    [24.9958, 30.5779, 37.6973], // 15
    [26.2962, 31.9999, 39.2524], // 16
    [27.5871, 33.4087, 40.7902], // 17
    [28.8693, 34.8053, 42.3124], // 18
    [30.1435, 36.1909, 43.8202], // 19
    [31.4104, 37.5662, 45.3147], // 20
    [32.6706, 38.9322, 46.7970], // 21
    [33.9244, 40.2894, 48.2679], // 22
    [35.1725, 41.6384, 49.7282], // 23
    [36.4150, 42.9798, 51.1786], // 24
    [37.6525, 44.3141, 52.6197], // 25
    [38.8851, 45.6417, 54.0520], // 26
    [40.1133, 46.9629, 55.4760], // 27
    [41.3371, 48.2782, 56.8923], // 28
    [42.5570, 49.5879, 58.3012], // 29
    [43.7730, 50.8922, 59.7031], // 30
    [44.9853, 52.1914, 61.0983], // 31
    [46.1943, 53.4858, 62.4872], // 32
    [47.3999, 54.7755, 63.8701], // 33
    [48.6024, 56.0609, 65.2472], // 34
    [49.8018, 57.3421, 66.6188], // 35
    [50.9985, 58.6192, 67.9852], // 36
    [52.1923, 59.8925, 69.3465], // 37
    [53.3835, 61.1621, 70.7029], // 38
    [54.5722, 62.4281, 72.0547], // 39
    [55.7585, 63.6907, 73.4020], // 40
    [56.9424, 64.9501, 74.7449], // 41
    [58.1240, 66.2062, 76.0838], // 42
    [59.3035, 67.4593, 77.4186], // 43
    [60.4809, 68.7095, 78.7495], // 44
    [61.6562, 69.9568, 80.0767], // 45
    [62.8296, 71.2014, 81.4003], // 46
    [64.0011, 72.4433, 82.7204], // 47
    [65.1708, 73.6826, 84.0371], // 48
    [66.3386, 74.9195, 85.3506], // 49
    [67.5048, 76.1539, 86.6608], // 50
    [68.6693, 77.3860, 87.9680], // 51
    [69.8322, 78.6158, 89.2722], // 52
    [70.9935, 79.8433, 90.5734], // 53
    [72.1532, 81.0688, 91.8718], // 54
    [73.3115, 82.2921, 93.1675], // 55
    [74.4683, 83.5134, 94.4605], // 56
    [75.6237, 84.7328, 95.7510], // 57
    [76.7778, 85.9502, 97.0388], // 58
    [77.9305, 87.1657, 98.3242], // 59
    [79.0819, 88.3794, 99.6072], // 60
    [80.2321, 89.5913, 100.8879], // 61
    [81.3810, 90.8015, 102.1662], // 62
    [82.5287, 92.0100, 103.4424], // 63
    [83.6753, 93.2169, 104.7163], // 64
    [84.8206, 94.4221, 105.9881], // 65
    [85.9649, 95.6257, 107.2579], // 66
    [87.1081, 96.8278, 108.5256], // 67
    [88.2502, 98.0284, 109.7913], // 68
    [89.3912, 99.2275, 111.0551], // 69
    [90.5312, 100.4252, 112.3169], // 70
    [91.6702, 101.6214, 113.5769], // 71
    [92.8083, 102.8163, 114.8351], // 72
    [93.9453, 104.0098, 116.0915], // 73
    [95.0815, 105.2020, 117.3462], // 74
    [96.2167, 106.3929, 118.5991], // 75
    [97.3510, 107.5825, 119.8503], // 76
    [98.4844, 108.7709, 121.1000], // 77
    [99.6169, 109.9581, 122.3480], // 78
    [100.7486, 111.1440, 123.5944], // 79
    [101.8795, 112.3288, 124.8392], // 80
    [103.0095, 113.5124, 126.0826], // 81
    [104.1387, 114.6949, 127.3244], // 82
    [105.2672, 115.8763, 128.5648], // 83
    [106.3948, 117.0565, 129.8037], // 84
    [107.5217, 118.2357, 131.0412], // 85
    [108.6479, 119.4139, 132.2773], // 86
    [109.7733, 120.5910, 133.5121], // 87
    [110.8980, 121.7671, 134.7455], // 88
    [112.0220, 122.9422, 135.9776], // 89
    [113.1453, 124.1163, 137.2084], // 90
    [114.2679, 125.2895, 138.4379], // 91
    [115.3898, 126.4617, 139.6661], // 92
    [116.5110, 127.6329, 140.8931], // 93
    [117.6317, 128.8032, 142.1189], // 94
    [118.7516, 129.9727, 143.3435], // 95
    [119.8709, 131.1412, 144.5670], // 96
    [120.9896, 132.3089, 145.7892], // 97
    [122.1077, 133.4757, 147.0104], // 98
    [123.2252, 134.6416, 148.2304], // 99
    [124.3421, 135.8067, 149.4493], // 100
];

fn alpha_column(alpha: f64) -> Result<usize> {
    SUPPORTED_ALPHAS
        .iter()
        .position(|&a| (a - alpha).abs() < 1e-12)
        .ok_or(Error::UnsupportedAlpha(alpha))
}

/// Source of critical values. Implement this to test at other levels.
pub trait CriticalValues {
    /// Largest acceptable KS statistic for sample size `n`.
    fn ks(&self, n: usize, alpha: f64) -> Result<f64>;
    /// Upper `alpha` quantile of chi-square with `dof` degrees of freedom.
    fn chi2(&self, dof: usize, alpha: f64) -> Result<f64>;
    /// Two-sided standard normal bound `z_{alpha/2}`.
    fn z_two_sided(&self, alpha: f64) -> Result<f64>;
}

/// The embedded tables.
#[derive(Debug, Clone, Copy, Default)]
pub struct StandardTables;

impl CriticalValues for StandardTables {
    fn ks(&self, n: usize, alpha: f64) -> Result<f64> {
        let col = alpha_column(alpha)?;
        match n {
            0 => Err(Error::SampleTooSmall { needed: 1, got: 0 }),
            1..=KS_EXACT_MAX_N => Ok(KS_TABLE[n - 1][col]),
            _ => Ok(KS_ASYMPTOTIC[col] / (n as f64).sqrt()),
        }
    }

    fn chi2(&self, dof: usize, alpha: f64) -> Result<f64> {
        let col = alpha_column(alpha)?;
        match dof {
            0 => Err(Error::param(
                "chi-square needs at least 1 degree of freedom",
            )),
            1..=CHI2_TABLE_MAX_DOF => Ok(CHI2_TABLE[dof - 1][col]),
            _ => {
                let k = dof as f64;
                let h = 2.0 / (9.0 * k);
                Ok(k * (1.0 - h + Z_ONE_SIDED[col] * h.sqrt()).powi(3))
            }
        }
    }

    fn z_two_sided(&self, alpha: f64) -> Result<f64> {
        Ok(Z_TWO_SIDED[alpha_column(alpha)?])
    }
}
