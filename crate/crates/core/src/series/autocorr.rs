use rustfft::{num_complex::Complex, FftPlanner};

use super::TimeSeries;

/// Biased sample autocorrelation `r(l)` for lags `0..n`, normalized so that
/// `r(0) = 1`. A constant series yields all zeros.
pub fn autocorrelation(series: &TimeSeries) -> Vec<f64> {
    let n = series.len();
    let mean = series.values().iter().sum::<f64>() / n as f64;
    let size = (2 * n).next_power_of_two();
    let mut buf: Vec<Complex<f64>> = series
        .values()
        .iter()
        .map(|v| Complex::new(v - mean, 0.0))
        .chain(std::iter::repeat(Complex::new(0.0, 0.0)))
        .take(size)
        .collect();

    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(size).process(&mut buf);
    for c in &mut buf {
        *c = Complex::new(c.norm_sqr(), 0.0);
    }
    planner.plan_fft_inverse(size).process(&mut buf);

    let zero = buf[0].re;
    if zero <= 0.0 {
        return vec![0.0; n];
    }
    buf[..n].iter().map(|c| c.re / zero).collect()
}

/// Longest lag over which the autocorrelation stays significant.
///
/// Walks the local maxima of `r(l)` for `l >= 1`; the first peak at or below
/// the `2/sqrt(N)` band ends the search. Returns the largest lag before that
/// point with `r(l)` above the band, or 0 when there is none.
///
/// # Panics
/// If the series has fewer than 3 samples.
pub fn autocorr_max_lag(series: &TimeSeries) -> usize {
    let n = series.len();
    assert!(n >= 3, "autocorr_max_lag needs at least 3 samples");
    let r = autocorrelation(series);
    let band = 2.0 / (n as f64).sqrt();

    let mut last = 0;
    for l in 1..n {
        let is_peak = r[l] >= r[l - 1] && (l + 1 == n || r[l] >= r[l + 1]);
        if is_peak && r[l] <= band {
            break;
        }
        if r[l] > band {
            last = l;
        }
    }
    last
}
