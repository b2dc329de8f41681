//! Classical and probabilistic visibility graphs (PVG) for time series.
//!
//! A time series becomes a graph whose nodes are samples. In the classical
//! visibility graph two samples are linked when the straight segment between
//! them passes strictly above every sample in between. The probabilistic
//! variant lets blocked pairs "tunnel" with probability `exp(-rho * h_max)`,
//! where `h_max` is the tallest obstruction above that segment on the
//! `[0, 1]`-normalized series, and keeps the pairs whose probability reaches a
//! threshold `p0`.
//!
//! Modules:
//! - [`series`]: signals, normalization, AM and surrogate generators,
//!   Butterworth preprocessing, autocorrelation.
//! - [`graph`]: obstruction heights, probability / strength / weighted
//!   matrices, thresholded and classical adjacency, exports.
//! - [`metrics`]: path length, clustering, small-worldness, power-law fit.
//! - [`experiment`]: parameter sweeps over `(rho, p0)` and segment sets.
//! - [`cli`]: the `pvg` command-line front end.

pub mod cli;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod metrics;
pub mod series;

pub use error::{PvgError, Result};
pub use experiment::{am_sweep, run_sweep, segmented_sweep, SweepConfig, SweepResult};
pub use graph::{
    build_classical_vg, build_pvg, Adjacency, ObstructionHeights, PvgMatrices, PvgParams, SymMatrix, VgAdjacency,
};
pub use metrics::{compute_all, BaselineConfig, GraphMetrics};
pub use series::{generate_am, normalize, AmSignalParams, NormalizedSeries, TimeSeries};

/// Text form used for every float written to CSV: 17 significant digits, so
/// parsing it back recovers the exact `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}
