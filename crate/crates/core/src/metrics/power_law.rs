use std::collections::BTreeMap;

use crate::error::{PvgError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawFit {
    /// Negated slope of `ln P(k)` against `ln k`.
    pub gamma: f64,
    /// Coefficient of determination of the log-log regression.
    pub r2: f64,
    /// Number of distinct degrees in the fit.
    pub support: usize,
}

/// Relative frequency of each degree `k >= 1` (over all nodes, including any
/// of degree 0).
pub fn degree_distribution(degrees: &[usize]) -> Vec<(usize, f64)> {
    let mut counts = BTreeMap::new();
    for &k in degrees.iter().filter(|&&k| k >= 1) {
        *counts.entry(k).or_insert(0usize) += 1;
    }
    let total = degrees.len() as f64;
    counts.into_iter().map(|(k, c)| (k, c as f64 / total)).collect()
}

/// Ordinary least squares of `ln p` on `ln k` over points with `k >= 1` and
/// `p > 0`.
pub fn fit_power_law(distribution: &[(usize, f64)]) -> Result<PowerLawFit> {
    let pts: Vec<(f64, f64)> =
        distribution.iter().filter(|&&(k, p)| k >= 1 && p > 0.0).map(|&(k, p)| ((k as f64).ln(), p.ln())).collect();
    if pts.len() < 3 {
        return Err(PvgError::InsufficientSupport { distinct: pts.len() });
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    let ss_res: f64 = pts.iter().map(|p| (p.1 - my - slope * (p.0 - mx)).powi(2)).sum();
    // a flat distribution is fitted perfectly by a flat line
    let r2 = if syy == 0.0 { 1.0 } else { (1.0 - ss_res / syy).clamp(0.0, 1.0) };
    Ok(PowerLawFit { gamma: -slope, r2, support: pts.len() })
}

/// Power-law exponent of a degree sequence by log-log linear regression on
/// the raw (unbinned) degree frequencies.
pub fn power_law_exponent(degrees: &[usize]) -> Result<PowerLawFit> {
    fit_power_law(&degree_distribution(degrees))
}
