// Sweep rho and p0 over an AM signal and print how the maximum degree,
// path length and clustering change.

use pvg::experiment::log_spaced;
use pvg::metrics::MetricKind;
use pvg::{am_sweep, AmSignalParams, SweepConfig, SweepResult};

pub fn run_example() -> pvg::Result<SweepResult> {
    let params = AmSignalParams { duration_s: 0.5, ..AmSignalParams::default() };
    let cfg = SweepConfig { rho_grid: log_spaced(0.1, 1e4, 6), p0_grid: vec![0.5, 1.0], ..SweepConfig::am_default() };
    am_sweep(&params, &cfg)
}

fn main() -> pvg::Result<()> {
    let result = run_example()?;
    for (p, p0) in result.p0_grid.iter().enumerate() {
        println!("p0 = {p0}");
        let kmax = result.curve(p, 0, MetricKind::KMax);
        let l = result.curve(p, 0, MetricKind::PathLength);
        let c = result.curve(p, 0, MetricKind::Clustering);
        for (r, rho) in result.rho_grid.iter().enumerate() {
            println!("  rho = {rho:>9.3}  k_max = {:?}  L = {:?}  C = {:?}", kmax[r], l[r], c[r]);
        }
    }
    Ok(())
}
