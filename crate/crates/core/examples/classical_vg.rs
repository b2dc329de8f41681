// Compare the classical visibility graph with PVGs that allow more and
// more tunnelling.

use pvg::{build_classical_vg, normalize, AmSignalParams, ObstructionHeights, PvgParams};

/// Edge counts of the classical VG and of PVGs at decreasing `rho`.
pub fn run_example() -> pvg::Result<(usize, Vec<(f64, usize)>)> {
    let params = AmSignalParams { duration_s: 0.5, ..AmSignalParams::default() };
    let series = normalize(&pvg::generate_am(&params)?);
    let vg = build_classical_vg(&series).adjacency.edge_count();
    let heights = ObstructionHeights::compute(&series);
    let mut pvg_edges = Vec::new();
    for rho in [1e4, 100.0, 10.0, 1.0] {
        let adj = heights.adjacency(&PvgParams::new(rho, 0.5)?);
        pvg_edges.push((rho, adj.edge_count()));
    }
    Ok((vg, pvg_edges))
}

fn main() -> pvg::Result<()> {
    let (vg, pvg_edges) = run_example()?;
    println!("classical VG: {vg} edges");
    for (rho, edges) in pvg_edges {
        println!("PVG rho = {rho:>7}: {edges} edges");
    }
    Ok(())
}
