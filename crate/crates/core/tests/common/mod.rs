//! Brute-force reference implementations and fixtures shared by the
//! integration tests. Everything here is written for clarity, not speed, and
//! avoids the library's own algorithms.

#![allow(dead_code)]

use pvg::graph::Adjacency;
use pvg::{normalize, NormalizedSeries, TimeSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random values in `[0, 1)`; ties have probability zero, so the
/// series is in generic position.
pub fn random_values(n: usize, seed: u64) -> Vec<f64> {
    let mut r = rng(seed);
    (0..n).map(|_| r.random::<f64>()).collect()
}

pub fn random_series(n: usize, seed: u64) -> NormalizedSeries {
    normalize(&TimeSeries::new(random_values(n, seed), 1.0).unwrap())
}

/// Tallest excess of an intermediate sample over the chord `i -> j`, using
/// the sample times, clamped at zero.
pub fn brute_h_max(s: &NormalizedSeries, i: usize, j: usize) -> f64 {
    let x = s.values();
    let (ti, tj) = (s.as_series().time(i), s.as_series().time(j));
    let mut best = 0.0f64;
    for n in i + 1..j {
        let tn = s.as_series().time(n);
        let chord = x[i] + (x[j] - x[i]) * (tn - ti) / (tj - ti);
        best = best.max(x[n] - chord);
    }
    best
}

/// Classical visibility: every intermediate sample strictly below the chord.
/// Cross-multiplied, so it is exact for dyadic values.
pub fn brute_visible(x: &[f64], i: usize, j: usize) -> bool {
    (i + 1..j).all(|n| (x[n] - x[i]) * ((j - i) as f64) < (x[j] - x[i]) * ((n - i) as f64))
}

pub fn brute_vg(x: &[f64]) -> Vec<(usize, usize)> {
    let n = x.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if brute_visible(x, i, j) {
                edges.push((i, j));
            }
        }
    }
    edges
}

pub fn dense(adj: &Adjacency) -> Vec<Vec<bool>> {
    let n = adj.n();
    (0..n).map(|i| (0..n).map(|j| adj.has_edge(i, j)).collect()).collect()
}

/// Mean shortest-path length over ordered pairs via Floyd–Warshall; `None`
/// when some pair is unreachable.
pub fn floyd_warshall_l(adj: &Adjacency) -> Option<f64> {
    let n = adj.n();
    const INF: u64 = u64::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
        for j in adj.neighbors(i) {
            row[j] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    let mut total = 0u64;
    for (i, row) in d.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if i != j {
                if v >= INF {
                    return None;
                }
                total += v;
            }
        }
    }
    Some(total as f64 / (n * (n - 1)) as f64)
}

/// Mean local clustering by explicit triangle counting.
pub fn triangle_clustering(adj: &Adjacency) -> f64 {
    let m = dense(adj);
    let n = adj.n();
    let mut sum = 0.0;
    for v in 0..n {
        let nb: Vec<usize> = (0..n).filter(|&u| m[v][u]).collect();
        let k = nb.len();
        if k < 2 {
            continue;
        }
        let mut links = 0;
        for a in 0..k {
            for b in a + 1..k {
                if m[nb[a]][nb[b]] {
                    links += 1;
                }
            }
        }
        sum += 2.0 * links as f64 / (k * (k - 1)) as f64;
    }
    sum / n as f64
}

/// Random connected graph: a random spanning tree plus extra random edges.
pub fn random_connected_graph(n: usize, extra: usize, seed: u64) -> Adjacency {
    let mut r = rng(seed);
    let mut adj = Adjacency::empty(n);
    for v in 1..n {
        let parent = r.random_range(0..v);
        adj.add_edge(parent, v).unwrap();
    }
    for _ in 0..extra {
        let (a, b) = (r.random_range(0..n), r.random_range(0..n));
        if a != b {
            adj.add_edge(a, b).unwrap();
        }
    }
    adj
}

pub fn star(n: usize) -> Adjacency {
    Adjacency::from_edges(n, (1..n).map(|v| (0, v))).unwrap()
}

pub fn triangle() -> Adjacency {
    Adjacency::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
}

/// Ring lattice with `k / 2` neighbours per side, each edge's far end
/// rewired with probability `p` to a uniformly chosen non-neighbour.
pub fn watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> Adjacency {
    let mut r = rng(seed);
    let mut adj = Adjacency::empty(n);
    for i in 0..n {
        for d in 1..=k / 2 {
            adj.add_edge(i, (i + d) % n).unwrap();
        }
    }
    for i in 0..n {
        for d in 1..=k / 2 {
            let j = (i + d) % n;
            if r.random::<f64>() < p && adj.degree(i) < n - 1 {
                let t = loop {
                    let t = r.random_range(0..n);
                    if t != i && !adj.has_edge(i, t) {
                        break t;
                    }
                };
                adj.remove_edge(i, j);
                adj.add_edge(i, t).unwrap();
            }
        }
    }
    adj
}

/// Degrees drawn from the discrete law `P(k) ∝ k^-a` on `1..=k_max` by
/// inverting the cumulative distribution.
pub fn sample_power_law(a: f64, k_max: usize, draws: usize, seed: u64) -> Vec<usize> {
    let weights: Vec<f64> = (1..=k_max).map(|k| (k as f64).powf(-a)).collect();
    let total: f64 = weights.iter().sum();
    let mut cdf = Vec::with_capacity(k_max);
    let mut acc = 0.0;
    for w in &weights {
        acc += w / total;
        cdf.push(acc);
    }
    let mut r = rng(seed);
    (0..draws)
        .map(|_| {
            let u: f64 = r.random();
            cdf.iter().position(|&c| u <= c).unwrap_or(k_max - 1) + 1
        })
        .collect()
}

/// Ordinary least squares of `ln P(k)` on `ln k`, returning `(gamma, r2)`.
pub fn ols_gamma(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    let ss_res: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - my - slope * (x - mx)).powi(2)).sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let r2 = if ss_tot == 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };
    (-slope, r2)
}
