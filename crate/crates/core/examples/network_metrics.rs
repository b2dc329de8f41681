// Compute path length, clustering, degree statistics and the power-law
// exponent of a PVG built from a noisy AM signal.

use pvg::{compute_all, normalize, AmSignalParams, BaselineConfig, GraphMetrics, ObstructionHeights, PvgParams};

pub fn run_example() -> pvg::Result<GraphMetrics> {
    let params = AmSignalParams { duration_s: 0.4, ..AmSignalParams::default() };
    let series = normalize(&pvg::generate_am(&params)?);
    let adj = ObstructionHeights::compute(&series).adjacency(&PvgParams::new(10.0, 0.5)?);
    Ok(compute_all(&adj, Some(&BaselineConfig { n_realizations: 5, rng_seed: 1 })))
}

fn main() -> pvg::Result<()> {
    let m = run_example()?;
    println!("{}", serde_json::to_string_pretty(&m)?);
    Ok(())
}
