// Build the probabilistic visibility graph of a short series and inspect
// its probability, strength and weighted matrices.

use pvg::{build_pvg, normalize, PvgMatrices, PvgParams, TimeSeries};

pub fn run_example() -> pvg::Result<PvgMatrices> {
    let series = TimeSeries::new(vec![0.3, 0.9, 0.1, 0.5, 0.2, 1.0, 0.4, 0.6], 0.01)?;
    build_pvg(&normalize(&series), PvgParams::new(2.0, 0.5)?)
}

fn main() -> pvg::Result<()> {
    let pvg = run_example()?;
    println!("nodes: {}, edges: {}", pvg.n(), pvg.adjacency.edge_count());
    for (i, j) in pvg.adjacency.edges() {
        println!(
            "{i:>2} - {j:<2}  P = {:.4}  W = {:.4}  M = {:.4}",
            pvg.prob.get(i, j),
            pvg.strength.get(i, j),
            pvg.weighted.get(i, j)
        );
    }
    Ok(())
}
