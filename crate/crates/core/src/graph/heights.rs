//! Maximum obstruction heights for every pair of samples.
//!
//! For a fixed left endpoint `i` the right endpoint `j` sweeps rightwards
//! while the upper convex hull of the intermediate samples `i+1..j` is
//! extended one point at a time (monotone chain, amortized O(1)). The tallest
//! obstruction above the chord `i -> j` maximizes `x[n] - s * n` for the chord
//! slope `s`; over the hull that objective is unimodal, so a binary search on
//! hull edge slopes finds it. Total cost is O(N^2 log N) against O(N^3) for a
//! direct scan.
//!
//! Heights do not depend on the sample interval: the chord is evaluated in
//! index units, which also makes them invariant to the start time.

use rayon::prelude::*;

use super::adjacency::Adjacency;
use super::matrix::SymMatrix;
use super::{tunnel_probability, PvgParams};
use crate::series::NormalizedSeries;

/// `h_max(i, j)` for all pairs, clamped at 0. Adjacent pairs are 0.
#[derive(Debug, Clone, PartialEq)]
pub struct ObstructionHeights(SymMatrix);

/// Height of sample `n` above the chord from `i` to `j`.
#[inline]
pub(crate) fn chord_excess(x: &[f64], i: usize, j: usize, n: usize) -> f64 {
    // Divide once at the end so the sign is exact whenever the products are,
    // which keeps exactly collinear samples at zero.
    let (span, offset) = ((j - i) as f64, (n - i) as f64);
    ((x[n] - x[i]) * span - (x[j] - x[i]) * offset) / span
}

#[derive(Default)]
struct UpperHull {
    points: Vec<usize>,
    // slope of the edge leaving points[k], strictly decreasing
    slopes: Vec<f64>,
}

impl UpperHull {
    fn clear(&mut self) {
        self.points.clear();
        self.slopes.clear();
    }

    fn push(&mut self, x: &[f64], p: usize) {
        while let [.., a, b] = self.points[..] {
            // drop b unless a -> b -> p turns clockwise
            let cross = (b - a) as f64 * (x[p] - x[a]) - (x[b] - x[a]) * (p - a) as f64;
            if cross >= 0.0 {
                self.points.pop();
                self.slopes.pop();
            } else {
                break;
            }
        }
        if let Some(&last) = self.points.last() {
            self.slopes.push((x[p] - x[last]) / (p - last) as f64);
        }
        self.points.push(p);
    }

    /// Hull vertex maximizing `x[v] - slope * v`.
    fn argmax(&self, slope: f64) -> usize {
        let k = self.slopes.partition_point(|&s| s > slope);
        self.points[k]
    }
}

fn fill_row(x: &[f64], i: usize, row: &mut [f64], hull: &mut UpperHull) {
    hull.clear();
    for (k, h) in row.iter_mut().enumerate() {
        let j = i + 1 + k;
        if j == i + 1 {
            *h = 0.0;
            continue;
        }
        hull.push(x, j - 1);
        let slope = (x[j] - x[i]) / (j - i) as f64;
        let v = hull.argmax(slope);
        *h = chord_excess(x, i, j, v).max(0.0);
    }
}

impl ObstructionHeights {
    /// Computes all heights, one hull sweep per left endpoint in parallel.
    /// The result does not depend on the thread schedule.
    pub fn compute(series: &NormalizedSeries) -> Self {
        let x = series.values();
        let mut m = SymMatrix::zeros(x.len());
        m.upper_rows_mut()
            .into_par_iter()
            .enumerate()
            .for_each_init(UpperHull::default, |hull, (i, row)| fill_row(x, i, row, hull));
        Self(m)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0.get(i, j)
    }

    pub fn as_matrix(&self) -> &SymMatrix {
        &self.0
    }

    /// Tunnelling probabilities `exp(-rho * h_max)`.
    pub fn probabilities(&self, rho: f64) -> SymMatrix {
        self.0.map(|h| tunnel_probability(h, rho))
    }

    /// Thresholded graph: edge `(i, j)` iff `exp(-rho * h_max) >= p0`.
    pub fn adjacency(&self, params: &PvgParams) -> Adjacency {
        Adjacency::from_fn(self.n(), |i, j| tunnel_probability(self.0.get(i, j), params.rho) >= params.p0)
    }
}
