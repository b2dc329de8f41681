//! Parameter sweeps over `(rho, p0)` and segment sets.

mod config;
pub mod export;
mod sweep;

pub use config::{Experiment, ExperimentConfig, Manifest, RecordingSource};
pub use sweep::{
    am_sweep, log_spaced, run_sweep, segmented_sweep, AggregateRecord, CellRecord, SweepConfig, SweepResult,
};
