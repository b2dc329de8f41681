use rayon::prelude::*;

use crate::error::{PvgError, Result};
use crate::graph::Adjacency;

/// Sum of BFS distances from `source` to every reachable node, and the
/// number of reachable nodes other than `source`.
fn bfs_from(adj: &Adjacency, source: usize) -> (u64, u64) {
    let words = adj.words_per_row();
    let mut visited = vec![0u64; words];
    let mut next = vec![0u64; words];
    visited[source / 64] |= 1 << (source % 64);
    let mut frontier = vec![source];
    let (mut total, mut reached, mut depth) = (0u64, 0u64, 0u64);

    while !frontier.is_empty() {
        depth += 1;
        next.iter_mut().for_each(|w| *w = 0);
        for &u in &frontier {
            for (acc, &w) in next.iter_mut().zip(adj.row(u)) {
                *acc |= w;
            }
        }
        frontier.clear();
        for (k, (acc, seen)) in next.iter_mut().zip(visited.iter_mut()).enumerate() {
            let mut fresh = *acc & !*seen;
            *seen |= fresh;
            while fresh != 0 {
                frontier.push(k * 64 + fresh.trailing_zeros() as usize);
                fresh &= fresh - 1;
            }
        }
        reached += frontier.len() as u64;
        total += depth * frontier.len() as u64;
    }
    (total, reached)
}

/// Component label per node (labels in order of first appearance) and the
/// component count.
pub fn connected_components(adj: &Adjacency) -> (Vec<usize>, usize) {
    let n = adj.n();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = count;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for v in adj.neighbors(u) {
                if label[v] == usize::MAX {
                    label[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Mean shortest-path length over all unordered node pairs.
pub fn avg_path_length(adj: &Adjacency) -> Result<f64> {
    let n = adj.n();
    if n < 2 {
        return Err(PvgError::InvalidParams("path length needs at least 2 nodes".into()));
    }
    let (_, components) = connected_components(adj);
    if components > 1 {
        return Err(PvgError::Disconnected { components });
    }
    if adj.edge_count() == n * (n - 1) / 2 {
        return Ok(1.0);
    }
    let total: u64 = (0..n).into_par_iter().map(|s| bfs_from(adj, s).0).sum();
    Ok(total as f64 / (n as u64 * (n as u64 - 1)) as f64)
}

/// Subgraph induced by the largest connected component (lowest label on ties).
pub fn largest_component(adj: &Adjacency) -> Adjacency {
    let (label, count) = connected_components(adj);
    if count <= 1 {
        return adj.clone();
    }
    let mut sizes = vec![0usize; count];
    for &l in &label {
        sizes[l] += 1;
    }
    let best = (0..count).max_by_key(|&c| (sizes[c], std::cmp::Reverse(c))).expect("non-empty");
    let members: Vec<usize> = (0..adj.n()).filter(|&v| label[v] == best).collect();
    let mut index = vec![usize::MAX; adj.n()];
    for (k, &v) in members.iter().enumerate() {
        index[v] = k;
    }
    let edges = adj.edges().into_iter().filter(|&(i, _)| label[i] == best).map(|(i, j)| (index[i], index[j]));
    Adjacency::from_edges(members.len(), edges).expect("relabelled edges are in range")
}
