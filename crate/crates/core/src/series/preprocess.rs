use serde::{Deserialize, Serialize};

use super::filter::Butterworth;
use super::TimeSeries;
use crate::error::{PvgError, Result};

/// Low-pass, decimate, then cut into equal non-overlapping segments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PreprocessConfig {
    pub cutoff_hz: f64,
    pub filter_order: usize,
    pub target_rate_hz: f64,
    pub segment_seconds: f64,
    pub n_segments: usize,
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        Self { cutoff_hz: 25.0, filter_order: 4, target_rate_hz: 50.0, segment_seconds: 10.0, n_segments: 30 }
    }
}

const RATE_TOL: f64 = 1e-9;

impl PreprocessConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(PvgError::InvalidParams(msg));
        if !(self.target_rate_hz.is_finite() && self.target_rate_hz > 0.0) {
            return fail(format!("target rate must be > 0, got {}", self.target_rate_hz));
        }
        if !(self.cutoff_hz > 0.0 && self.cutoff_hz <= self.target_rate_hz / 2.0) {
            return fail(format!(
                "cutoff {} Hz must lie in (0, {}] Hz (Nyquist of the target rate)",
                self.cutoff_hz,
                self.target_rate_hz / 2.0
            ));
        }
        if self.filter_order == 0 {
            return fail("filter order must be >= 1".into());
        }
        if self.n_segments == 0 {
            return fail("n_segments must be >= 1".into());
        }
        let len = self.segment_seconds * self.target_rate_hz;
        if !(len.is_finite() && len >= 2.0 && (len - len.round()).abs() <= RATE_TOL * len) {
            return fail(format!(
                "segment of {} s at {} Hz must hold a whole number (>= 2) of samples",
                self.segment_seconds, self.target_rate_hz
            ));
        }
        Ok(())
    }

    pub fn segment_len(&self) -> usize {
        (self.segment_seconds * self.target_rate_hz).round() as usize
    }

    /// Integer decimation factor from `source_hz` to the target rate.
    pub fn decimation_factor(&self, source_hz: f64) -> Result<usize> {
        let ratio = source_hz / self.target_rate_hz;
        let k = ratio.round();
        if k < 1.0 || (ratio - k).abs() > RATE_TOL * ratio {
            return Err(PvgError::RateMismatch { source_hz, target_hz: self.target_rate_hz });
        }
        Ok(k as usize)
    }
}

/// Zero-phase low-pass at `cutoff_hz`, keep every k-th sample, and split into
/// `n_segments` consecutive segments of `segment_seconds` each.
pub fn preprocess(series: &TimeSeries, cfg: &PreprocessConfig) -> Result<Vec<TimeSeries>> {
    cfg.validate()?;
    let source_hz = series.sample_rate();
    let factor = cfg.decimation_factor(source_hz)?;
    let seg_len = cfg.segment_len();
    let needed = seg_len * cfg.n_segments;
    let available = series.len().div_ceil(factor);
    if available < needed {
        return Err(PvgError::TooShort { needed, available });
    }

    // identity when the cutoff reaches the source Nyquist (no decimation)
    let filtered = if cfg.cutoff_hz < source_hz / 2.0 {
        Butterworth::lowpass(cfg.filter_order, cfg.cutoff_hz, source_hz)?.filtfilt(series.values())
    } else {
        series.values().to_vec()
    };
    let decimated: Vec<f64> = filtered.into_iter().step_by(factor).take(needed).collect();
    let out_dt = 1.0 / cfg.target_rate_hz;

    decimated
        .chunks_exact(seg_len)
        .enumerate()
        .map(|(s, chunk)| {
            let t0 = series.t0() + (s * seg_len * factor) as f64 * series.dt();
            TimeSeries::with_start(chunk.to_vec(), out_dt, t0)
        })
        .collect()
}
