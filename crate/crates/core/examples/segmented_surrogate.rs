// Run a full segmented experiment from a TOML config and write its result
// files, mirroring what `pvg sweep` does.

use pvg::experiment::{export, ExperimentConfig};
use pvg::SweepResult;

const CONFIG: &str = r#"
[experiment]
kind = "segments"

[experiment.source]
type = "surrogate"
duration_s = 20.0
rate_hz = 1000.0
rng_seed = 5

[experiment.preprocess]
n_segments = 4
segment_seconds = 5.0

[sweep]
rho_grid = [0.1, 1.0, 10.0, 100.0]
p0_grid = [0.5, 1.0]
metrics = ["k_max", "C", "L"]
"#;

pub fn run_example() -> pvg::Result<SweepResult> {
    ExperimentConfig::from_toml(CONFIG)?.run()
}

fn main() -> pvg::Result<()> {
    let result = run_example()?;
    export::write_aggregates_csv(&result, std::io::stdout())?;
    Ok(())
}
