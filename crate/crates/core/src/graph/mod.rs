//! Visibility graph construction.

mod adjacency;
mod heights;
mod matrix;

pub use adjacency::{degree_sequence, Adjacency};
pub use heights::ObstructionHeights;
pub use matrix::SymMatrix;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{PvgError, Result};
use crate::series::NormalizedSeries;

/// Decay rate `rho` applied to obstruction heights and threshold `p0` on the
/// resulting probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PvgParams {
    pub rho: f64,
    pub p0: f64,
}

impl PvgParams {
    pub fn new(rho: f64, p0: f64) -> Result<Self> {
        let p = Self { rho, p0 };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rho.is_finite() && self.rho >= 0.0) {
            return Err(PvgError::InvalidParams(format!("rho must be finite and >= 0, got {}", self.rho)));
        }
        if !(0.0..=1.0).contains(&self.p0) {
            return Err(PvgError::InvalidParams(format!("p0 must lie in [0, 1], got {}", self.p0)));
        }
        Ok(())
    }
}

/// `exp(-rho * h_max)`.
#[inline]
pub fn tunnel_probability(h_max: f64, rho: f64) -> f64 {
    (-rho * h_max).exp()
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if i < j && j < n {
        Ok(())
    } else {
        Err(PvgError::IndexOutOfRange { i, j, n })
    }
}

/// Tallest excess of an intermediate sample over the chord from `i` to `j`,
/// clamped at 0. Direct scan over the interval.
pub fn obstruction_height_max(series: &NormalizedSeries, i: usize, j: usize) -> Result<f64> {
    check_pair(series.len(), i, j)?;
    let x = series.values();
    Ok((i + 1..j).map(|n| heights::chord_excess(x, i, j, n)).fold(0.0, f64::max))
}

/// `atan(|x_j - x_i| / (t_j - t_i))` on the normalized series, time in the
/// series' own units.
pub fn interaction_strength(series: &NormalizedSeries, i: usize, j: usize) -> Result<f64> {
    check_pair(series.len(), i, j)?;
    Ok(strength_unchecked(series, i, j))
}

#[inline]
fn strength_unchecked(series: &NormalizedSeries, i: usize, j: usize) -> f64 {
    let x = series.values();
    ((x[j] - x[i]).abs() / ((j - i) as f64 * series.dt())).atan()
}

/// Probability, strength and weighted matrices of a PVG plus the thresholded
/// binary adjacency.
#[derive(Debug, Clone, PartialEq)]
pub struct PvgMatrices {
    pub params: PvgParams,
    pub prob: SymMatrix,
    pub strength: SymMatrix,
    pub weighted: SymMatrix,
    pub adjacency: Adjacency,
}

impl PvgMatrices {
    pub fn n(&self) -> usize {
        self.prob.n()
    }
}

/// Strength matrix `W` for all pairs.
pub fn strength_matrix(series: &NormalizedSeries) -> SymMatrix {
    let mut w = SymMatrix::zeros(series.len());
    w.upper_rows_mut().into_par_iter().enumerate().for_each(|(i, row)| {
        for (k, v) in row.iter_mut().enumerate() {
            *v = strength_unchecked(series, i, i + 1 + k);
        }
    });
    w
}

/// Assembles the PVG from precomputed heights.
pub fn pvg_from_heights(
    series: &NormalizedSeries,
    heights: &ObstructionHeights,
    params: PvgParams,
) -> Result<PvgMatrices> {
    params.validate()?;
    if heights.n() != series.len() {
        return Err(PvgError::InvalidParams(format!(
            "heights for {} nodes do not match a series of {}",
            heights.n(),
            series.len()
        )));
    }
    let prob = heights.probabilities(params.rho);
    let strength = strength_matrix(series);
    let weighted =
        SymMatrix::from_upper(prob.n(), strength.upper().iter().zip(prob.upper()).map(|(w, p)| w * p).collect())?;
    let adjacency = Adjacency::from_fn(prob.n(), |i, j| prob.get(i, j) >= params.p0);
    Ok(PvgMatrices { params, prob, strength, weighted, adjacency })
}

pub fn build_pvg(series: &NormalizedSeries, params: PvgParams) -> Result<PvgMatrices> {
    params.validate()?;
    pvg_from_heights(series, &ObstructionHeights::compute(series), params)
}

/// Classical visibility graph: `(i, j)` is an edge iff every intermediate
/// sample lies strictly below the chord.
#[derive(Debug, Clone, PartialEq)]
pub struct VgAdjacency {
    pub adjacency: Adjacency,
}

/// Classical visibility graph via a running maximum of slopes: `j` is
/// visible from `i` iff the slope `i -> j` exceeds every slope `i -> n`
/// for `i < n < j`. Slopes are compared by cross-multiplying with the index
/// gaps, so exactly collinear samples block each other.
pub fn build_classical_vg(series: &NormalizedSeries) -> VgAdjacency {
    let x = series.values();
    let n = x.len();
    let lists: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut visible = Vec::new();
            if i + 1 < n {
                visible.push(i + 1);
            }
            // steepest sample so far: rise over run
            let mut best = (x.get(i + 1).map_or(0.0, |v| v - x[i]), 1.0);
            for j in i + 2..n {
                let (rise, run) = (x[j] - x[i], (j - i) as f64);
                if rise * best.1 > best.0 * run {
                    visible.push(j);
                    best = (rise, run);
                }
            }
            visible
        })
        .collect();
    let adjacency = Adjacency::from_upper_lists(n, &lists).expect("indices are in range");
    VgAdjacency { adjacency }
}
