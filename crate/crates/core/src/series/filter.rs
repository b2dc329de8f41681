//! Butterworth low-pass design (bilinear transform, second-order sections)
//! and forward-backward zero-phase filtering.

use std::f64::consts::PI;

use rustfft::num_complex::Complex;

use crate::error::{PvgError, Result};

/// One second-order section in transposed direct form II, `a0 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Biquad {
    pub b: [f64; 3],
    pub a: [f64; 2],
}

impl Biquad {
    fn dc_gain(&self) -> f64 {
        (self.b[0] + self.b[1] + self.b[2]) / (1.0 + self.a[0] + self.a[1])
    }

    /// Filter state that makes a constant input of `level` pass without a transient.
    fn steady_state(&self, level: f64) -> [f64; 2] {
        let y = self.dc_gain() * level;
        let z2 = self.b[2] * level - self.a[1] * y;
        let z1 = self.b[1] * level - self.a[0] * y + z2;
        [z1, z2]
    }

    fn run(&self, data: &mut [f64], mut state: [f64; 2]) {
        let [b0, b1, b2] = self.b;
        let [a1, a2] = self.a;
        for x in data.iter_mut() {
            let input = *x;
            let y = b0 * input + state[0];
            state[0] = b1 * input - a1 * y + state[1];
            state[1] = b2 * input - a2 * y;
            *x = y;
        }
    }

    fn response(&self, z_inv: Complex<f64>) -> Complex<f64> {
        let z2 = z_inv * z_inv;
        let num = self.b[0] + z_inv * self.b[1] + z2 * self.b[2];
        let den = 1.0 + z_inv * self.a[0] + z2 * self.a[1];
        num / den
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Butterworth {
    sections: Vec<Biquad>,
    sample_rate_hz: f64,
}

impl Butterworth {
    pub fn lowpass(order: usize, cutoff_hz: f64, sample_rate_hz: f64) -> Result<Self> {
        if order == 0 {
            return Err(PvgError::InvalidParams("filter order must be >= 1".into()));
        }
        if !(cutoff_hz > 0.0 && cutoff_hz < sample_rate_hz / 2.0) {
            return Err(PvgError::InvalidParams(format!(
                "cutoff {cutoff_hz} Hz must lie in (0, {}) Hz",
                sample_rate_hz / 2.0
            )));
        }
        // prewarped analog cutoff in units of 2 * fs
        let k = (PI * cutoff_hz / sample_rate_hz).tan();
        let k2 = k * k;
        let mut sections = Vec::with_capacity(order.div_ceil(2));
        for p in 0..order / 2 {
            let damping = 2.0 * ((2 * p + 1) as f64 * PI / (2 * order) as f64).sin();
            let norm = 1.0 / (1.0 + damping * k + k2);
            let b0 = k2 * norm;
            sections
                .push(Biquad { b: [b0, 2.0 * b0, b0], a: [2.0 * (k2 - 1.0) * norm, (1.0 - damping * k + k2) * norm] });
        }
        if order % 2 == 1 {
            let b0 = k / (1.0 + k);
            sections.push(Biquad { b: [b0, b0, 0.0], a: [(k - 1.0) / (k + 1.0), 0.0] });
        }
        Ok(Self { sections, sample_rate_hz })
    }

    pub fn sections(&self) -> &[Biquad] {
        &self.sections
    }

    /// Complex frequency response of a single (causal) pass at `freq_hz`.
    pub fn response(&self, freq_hz: f64) -> Complex<f64> {
        let w = 2.0 * PI * freq_hz / self.sample_rate_hz;
        let z_inv = Complex::from_polar(1.0, -w);
        self.sections.iter().map(|s| s.response(z_inv)).product()
    }

    /// Causal pass with steady-state initial conditions matched to `data[0]`.
    pub fn filter(&self, data: &mut [f64]) {
        let Some(&first) = data.first() else { return };
        let mut level = first;
        for s in &self.sections {
            s.run(data, s.steady_state(level));
            level *= s.dc_gain();
        }
    }

    fn pad_len(&self) -> usize {
        let first_order = self.sections.iter().filter(|s| s.b[2] == 0.0).count();
        3 * (2 * self.sections.len() + 1 - first_order)
    }

    /// Zero-phase filtering: odd-reflection padding, a forward pass, then a
    /// backward pass. The net magnitude response is `|H(f)|^2`.
    pub fn filtfilt(&self, data: &[f64]) -> Vec<f64> {
        let n = data.len();
        if n == 0 {
            return Vec::new();
        }
        let pad = self.pad_len().min(n - 1);
        let (head, tail) = (data[0], data[n - 1]);
        let mut ext = Vec::with_capacity(n + 2 * pad);
        ext.extend((1..=pad).rev().map(|i| 2.0 * head - data[i]));
        ext.extend_from_slice(data);
        ext.extend((1..=pad).map(|i| 2.0 * tail - data[n - 1 - i]));

        self.filter(&mut ext);
        ext.reverse();
        self.filter(&mut ext);
        ext.reverse();
        ext[pad..pad + n].to_vec()
    }
}
