// Low-pass filter, decimate and cut a long recording into segments, then
// pick a lag from the autocorrelation of one segment.

use pvg::series::{autocorr_max_lag, generate_surrogate, preprocess, PreprocessConfig, SurrogateParams};

pub struct Summary {
    pub segments: usize,
    pub segment_len: usize,
    pub segment_rate_hz: f64,
    pub first_segment_lag: usize,
}

pub fn run_example() -> pvg::Result<Summary> {
    let recording =
        generate_surrogate(&SurrogateParams { duration_s: 60.0, rng_seed: 3, ..SurrogateParams::default() })?;
    let cfg = PreprocessConfig { n_segments: 6, ..PreprocessConfig::default() };
    let segments = preprocess(&recording, &cfg)?;
    Ok(Summary {
        segments: segments.len(),
        segment_len: segments[0].len(),
        segment_rate_hz: segments[0].sample_rate(),
        first_segment_lag: autocorr_max_lag(&segments[0]),
    })
}

fn main() -> pvg::Result<()> {
    let s = run_example()?;
    println!(
        "{} segments of {} samples at {} Hz; autocorrelation lag of segment 0: {}",
        s.segments, s.segment_len, s.segment_rate_hz, s.first_segment_lag
    );
    Ok(())
}
