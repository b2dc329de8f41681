use rand::Rng;

use crate::error::{PvgError, Result};
use crate::graph::Adjacency;

/// Uniform random graph with exactly `n` nodes and `m` edges, G(n, m).
///
/// When `m` exceeds half of all pairs the complement is sampled instead.
pub fn gnm_random_graph<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<Adjacency> {
    let pairs = n * n.saturating_sub(1) / 2;
    if m > pairs {
        return Err(PvgError::InvalidParams(format!("{m} edges exceed the {pairs} pairs of {n} nodes")));
    }
    let complement = m > pairs / 2;
    let draw = if complement { pairs - m } else { m };
    let picked = rand::seq::index::sample(rng, pairs, draw);

    let offsets: Vec<usize> = (0..n).map(|i| i * n - i * (i + 1) / 2).collect();
    let pair_of = |k: usize| {
        let i = offsets.partition_point(|&o| o <= k) - 1;
        (i, i + 1 + k - offsets[i])
    };

    if complement {
        let mut g = Adjacency::complete(n);
        for k in picked.iter() {
            let (i, j) = pair_of(k);
            g.remove_edge(i, j);
        }
        Ok(g)
    } else {
        Adjacency::from_edges(n, picked.iter().map(pair_of))
    }
}
