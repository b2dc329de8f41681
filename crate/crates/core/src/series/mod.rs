//! Uniformly sampled scalar signals: construction, normalization, synthetic
//! generators, preprocessing and autocorrelation diagnostics.

mod autocorr;
pub mod filter;
mod generate;
pub mod io;
mod preprocess;

pub use autocorr::{autocorr_max_lag, autocorrelation};
pub use generate::{generate_am, generate_surrogate, AmSignalParams, SurrogateParams};
pub use preprocess::{preprocess, PreprocessConfig};

use crate::error::{PvgError, Result};

/// A uniformly sampled real signal. Sample `i` sits at `t0 + i * dt` seconds.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    values: Vec<f64>,
    dt: f64,
    t0: f64,
}

impl TimeSeries {
    pub fn new(values: Vec<f64>, dt: f64) -> Result<Self> {
        Self::with_start(values, dt, 0.0)
    }

    pub fn with_start(values: Vec<f64>, dt: f64, t0: f64) -> Result<Self> {
        if values.len() < 2 {
            return Err(PvgError::InvalidSeries(format!("need at least 2 samples, got {}", values.len())));
        }
        if !(dt.is_finite() && dt > 0.0) {
            return Err(PvgError::InvalidSeries(format!("sample interval must be > 0, got {dt}")));
        }
        if !t0.is_finite() {
            return Err(PvgError::InvalidSeries("start time must be finite".into()));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(PvgError::InvalidSeries(format!("non-finite sample at index {pos}")));
        }
        Ok(Self { values, dt, t0 })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn sample_rate(&self) -> f64 {
        1.0 / self.dt
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn time(&self, i: usize) -> f64 {
        self.t0 + i as f64 * self.dt
    }

    /// Root mean square of the samples.
    pub fn rms(&self) -> f64 {
        (self.values.iter().map(|v| v * v).sum::<f64>() / self.len() as f64).sqrt()
    }
}

/// A series affinely mapped onto `[0, 1]`.
///
/// A constant source maps to all zeros and sets [`NormalizedSeries::is_constant`];
/// graphs built from it are still well defined.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedSeries {
    series: TimeSeries,
    original_min: f64,
    original_max: f64,
    constant: bool,
}

impl NormalizedSeries {
    pub fn values(&self) -> &[f64] {
        self.series.values()
    }

    pub fn dt(&self) -> f64 {
        self.series.dt()
    }

    pub fn t0(&self) -> f64 {
        self.series.t0()
    }

    pub fn len(&self) -> usize {
        self.series.len()
    }

    pub fn is_empty(&self) -> bool {
        self.series.is_empty()
    }

    pub fn original_min(&self) -> f64 {
        self.original_min
    }

    pub fn original_max(&self) -> f64 {
        self.original_max
    }

    pub fn is_constant(&self) -> bool {
        self.constant
    }

    pub fn as_series(&self) -> &TimeSeries {
        &self.series
    }
}

/// Min-max normalization onto `[0, 1]`.
pub fn normalize(series: &TimeSeries) -> NormalizedSeries {
    let (min, max) =
        series.values().iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let constant = max == min;
    let values = if constant {
        vec![0.0; series.len()]
    } else {
        let range = max - min;
        series.values().iter().map(|&v| if v == max { 1.0 } else { ((v - min) / range).clamp(0.0, 1.0) }).collect()
    };
    NormalizedSeries {
        series: TimeSeries { values, dt: series.dt(), t0: series.t0() },
        original_min: min,
        original_max: max,
        constant,
    }
}
