use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rustfft::{num_complex::Complex, FftPlanner};
use serde::{Deserialize, Serialize};

use super::TimeSeries;
use crate::error::{PvgError, Result};

/// Amplitude-modulated carrier with additive Gaussian noise:
/// `a_c (1 + m cos(2π f_m t)) sin(2π f_c t) + η(t)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AmSignalParams {
    pub carrier_amplitude: f64,
    pub carrier_hz: f64,
    pub modulation_hz: f64,
    pub modulation_depth: f64,
    /// Standard deviation of the zero-mean noise term.
    pub noise_std: f64,
    pub duration_s: f64,
    pub dt: f64,
    pub rng_seed: u64,
}

impl Default for AmSignalParams {
    fn default() -> Self {
        Self {
            carrier_amplitude: 1.0,
            carrier_hz: 40.0,
            modulation_hz: 6.0,
            modulation_depth: 0.5,
            noise_std: 0.01,
            duration_s: 5.0,
            dt: 0.001,
            rng_seed: 0,
        }
    }
}

impl AmSignalParams {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(PvgError::InvalidParams(msg.to_owned()));
        let all = [
            self.carrier_amplitude,
            self.carrier_hz,
            self.modulation_hz,
            self.modulation_depth,
            self.noise_std,
            self.duration_s,
            self.dt,
        ];
        if all.iter().any(|v| !v.is_finite()) {
            return fail("all AM parameters must be finite");
        }
        if !(self.carrier_hz > self.modulation_hz && self.modulation_hz >= 0.0) {
            return fail("require carrier_hz > modulation_hz >= 0");
        }
        if self.dt <= 0.0 {
            return fail("dt must be > 0");
        }
        if self.duration_s < self.dt {
            return fail("duration_s must be >= dt");
        }
        if self.modulation_depth < 0.0 {
            return fail("modulation_depth must be >= 0");
        }
        if self.noise_std < 0.0 {
            return fail("noise_std must be >= 0");
        }
        Ok(())
    }

    pub fn sample_count(&self) -> usize {
        (self.duration_s / self.dt).round() as usize
    }
}

pub fn generate_am(params: &AmSignalParams) -> Result<TimeSeries> {
    params.validate()?;
    let n = params.sample_count();
    let mut values: Vec<f64> = (0..n)
        .map(|i| {
            let t = i as f64 * params.dt;
            params.carrier_amplitude
                * (1.0 + params.modulation_depth * (2.0 * PI * params.modulation_hz * t).cos())
                * (2.0 * PI * params.carrier_hz * t).sin()
        })
        .collect();
    if params.noise_std > 0.0 {
        let noise = Normal::new(0.0, params.noise_std).map_err(|e| PvgError::InvalidParams(e.to_string()))?;
        let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
        for v in &mut values {
            *v += noise.sample(&mut rng);
        }
    }
    TimeSeries::new(values, params.dt)
}

/// Seeded power-law noise (`1/f^exponent` power spectrum), a stand-in for
/// long field-potential recordings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SurrogateParams {
    pub duration_s: f64,
    pub rate_hz: f64,
    /// Spectral exponent; 1 is pink noise.
    pub exponent: f64,
    /// Output standard deviation.
    pub std: f64,
    pub rng_seed: u64,
}

impl Default for SurrogateParams {
    fn default() -> Self {
        Self { duration_s: 300.0, rate_hz: 1000.0, exponent: 1.0, std: 1.0, rng_seed: 0 }
    }
}

pub fn generate_surrogate(params: &SurrogateParams) -> Result<TimeSeries> {
    if !(params.duration_s > 0.0 && params.rate_hz > 0.0 && params.std > 0.0) || !params.exponent.is_finite() {
        return Err(PvgError::InvalidParams(
            "surrogate needs positive duration, rate and std and a finite exponent".into(),
        ));
    }
    let n = (params.duration_s * params.rate_hz).round() as usize;
    if n < 2 {
        return Err(PvgError::InvalidParams("surrogate must have at least 2 samples".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    let mut buf: Vec<Complex<f64>> = (0..n).map(|_| Complex::new(normal.sample(&mut rng), 0.0)).collect();

    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(n).process(&mut buf);
    buf[0] = Complex::new(0.0, 0.0);
    for (k, c) in buf.iter_mut().enumerate().skip(1) {
        // fold onto the positive frequency so the spectrum stays Hermitian
        let f = k.min(n - k) as f64;
        *c *= f.powf(-params.exponent / 2.0);
    }
    planner.plan_fft_inverse(n).process(&mut buf);

    let mut values: Vec<f64> = buf.iter().map(|c| c.re).collect();
    let mean = values.iter().sum::<f64>() / n as f64;
    let sd = (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n as f64).sqrt();
    for v in &mut values {
        *v = (*v - mean) / sd * params.std;
    }
    TimeSeries::new(values, 1.0 / params.rate_hz)
}
