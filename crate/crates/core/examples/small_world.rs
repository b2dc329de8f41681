// Small-worldness of a rewired ring lattice against its random baseline.

use pvg::graph::Adjacency;
use pvg::metrics::{small_worldness, BaselineConfig, SmallWorld};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Ring of `n` nodes, each linked to its `k / 2` neighbours on either side,
/// with each edge's far end rewired with probability `p`.
pub fn watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> pvg::Result<Adjacency> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = Adjacency::empty(n);
    for i in 0..n {
        for d in 1..=k / 2 {
            adj.add_edge(i, (i + d) % n)?;
        }
    }
    for i in 0..n {
        for d in 1..=k / 2 {
            let j = (i + d) % n;
            if rng.random::<f64>() < p && adj.degree(i) < n - 1 {
                let target = loop {
                    let t = rng.random_range(0..n);
                    if t != i && !adj.has_edge(i, t) {
                        break t;
                    }
                };
                adj.remove_edge(i, j);
                adj.add_edge(i, target)?;
            }
        }
    }
    Ok(adj)
}

pub fn run_example() -> pvg::Result<SmallWorld> {
    let adj = watts_strogatz(100, 4, 0.05, 7)?;
    small_worldness(&adj, &BaselineConfig { n_realizations: 20, rng_seed: 0 })
}

fn main() -> pvg::Result<()> {
    let sw = run_example()?;
    println!("C = {:.4}  L = {:.4}", sw.clustering, sw.path_length);
    println!("C_rand = {:.4}  L_rand = {:.4}", sw.c_rand, sw.l_rand);
    println!("sigma = {:.3}", sw.sigma);
    Ok(())
}
