use rayon::prelude::*;

use crate::error::{PvgError, Result};
use crate::graph::Adjacency;

/// Local clustering of node `v`: edges among its neighbours over
/// `k (k - 1) / 2`. Nodes with fewer than two neighbours score 0.
pub fn local_clustering(adj: &Adjacency, v: usize) -> f64 {
    let k = adj.degree(v);
    if k < 2 {
        return 0.0;
    }
    let row = adj.row(v);
    // each neighbour-neighbour edge is seen from both ends
    let twice_links: u64 = adj
        .neighbors(v)
        .map(|u| row.iter().zip(adj.row(u)).map(|(a, b)| (a & b).count_ones() as u64).sum::<u64>())
        .sum();
    twice_links as f64 / (k * (k - 1)) as f64
}

/// Mean local clustering over all nodes (Watts-Strogatz convention).
pub fn clustering_coefficient(adj: &Adjacency) -> Result<f64> {
    let n = adj.n();
    if n < 3 {
        return Err(PvgError::InvalidParams("clustering needs at least 3 nodes".into()));
    }
    let local: Vec<f64> = (0..n).into_par_iter().map(|v| local_clustering(adj, v)).collect();
    Ok(local.iter().sum::<f64>() / n as f64)
}
