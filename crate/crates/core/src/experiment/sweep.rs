use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{PvgError, Result};
use crate::graph::{ObstructionHeights, PvgParams};
use crate::metrics::{
    compute_local, finish_sigma, gnm_baseline, wants_baseline, BaselineConfig, GraphMetrics, MetricIssue, MetricKind,
};
use crate::series::{
    generate_am, normalize, preprocess, AmSignalParams, NormalizedSeries, PreprocessConfig, TimeSeries,
};

/// `count` points spaced evenly in log10 between `start` and `end`, both
/// included exactly.
pub fn log_spaced(start: f64, end: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let (a, b) = (start.log10(), end.log10());
            (0..count)
                .map(|k| match k {
                    0 => start,
                    k if k == count - 1 => end,
                    k => 10f64.powf(a + (b - a) * k as f64 / (count - 1) as f64),
                })
                .collect()
        }
    }
}

/// Axes and metrics of a parameter sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub rho_grid: Vec<f64>,
    pub p0_grid: Vec<f64>,
    pub baseline: Option<BaselineConfig>,
    pub metrics: Vec<MetricKind>,
}

impl Default for SweepConfig {
    /// 30 log-spaced decay rates over `[0.1, 1e4]`, thresholds
    /// `{0.25, 0.5, 0.75, 1}`, every metric, 20 baseline realizations.
    fn default() -> Self {
        Self {
            rho_grid: log_spaced(0.1, 1e4, 30),
            p0_grid: vec![0.25, 0.5, 0.75, 1.0],
            baseline: Some(BaselineConfig::default()),
            metrics: MetricKind::ALL.to_vec(),
        }
    }
}

impl SweepConfig {
    /// Defaults for the AM experiment: path length, clustering and maximum
    /// degree, no random baseline.
    pub fn am_default() -> Self {
        Self {
            baseline: None,
            metrics: vec![MetricKind::PathLength, MetricKind::Clustering, MetricKind::KMax],
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let increasing = |g: &[f64]| g.windows(2).all(|w| w[0] < w[1]);
        if self.rho_grid.is_empty() || !increasing(&self.rho_grid) {
            return Err(PvgError::Config("rho_grid must be non-empty and strictly increasing".into()));
        }
        if self.p0_grid.is_empty() || !increasing(&self.p0_grid) {
            return Err(PvgError::Config("p0_grid must be non-empty and strictly increasing".into()));
        }
        for &rho in &self.rho_grid {
            for &p0 in &self.p0_grid {
                PvgParams::new(rho, p0)?;
            }
        }
        if self.metrics.is_empty() {
            return Err(PvgError::Config("no metrics enabled".into()));
        }
        if let Some(b) = &self.baseline {
            b.validate()?;
        }
        Ok(())
    }

    fn sorted_metrics(&self) -> Vec<MetricKind> {
        let mut m = self.metrics.clone();
        m.sort();
        m.dedup();
        m
    }
}

/// Outcome of one `(rho, p0, segment)` cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellRecord {
    pub rho: f64,
    pub p0: f64,
    pub segment_id: usize,
    pub metrics: Option<GraphMetrics>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub issues: Vec<MetricIssue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CellRecord {
    pub fn value(&self, metric: MetricKind) -> Option<f64> {
        self.metrics.as_ref().and_then(|m| metric.value(m))
    }

    /// Reason a metric is missing from this cell, if it is.
    pub fn missing_reason(&self, metric: MetricKind) -> Option<&str> {
        if let Some(e) = &self.error {
            return Some(e);
        }
        if self.value(metric).is_some() {
            return None;
        }
        self.issues.iter().find(|i| i.metric == metric).map(|i| i.reason.as_str()).or(Some("absent"))
    }
}

/// Mean and population standard deviation of one metric across segments,
/// over the segments where it is defined.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateRecord {
    pub rho: f64,
    pub p0: f64,
    pub metric: MetricKind,
    pub mean: Option<f64>,
    pub std: Option<f64>,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub rho_grid: Vec<f64>,
    pub p0_grid: Vec<f64>,
    pub n_segments: usize,
    pub metrics: Vec<MetricKind>,
    /// Ordered by rho index, then p0 index, then segment.
    pub cells: Vec<CellRecord>,
    /// Ordered by rho index, then p0 index, then metric.
    pub aggregates: Vec<AggregateRecord>,
}

impl SweepResult {
    pub fn cell(&self, rho_idx: usize, p0_idx: usize, segment: usize) -> &CellRecord {
        &self.cells[(rho_idx * self.p0_grid.len() + p0_idx) * self.n_segments + segment]
    }

    pub fn aggregate(&self, rho_idx: usize, p0_idx: usize, metric: MetricKind) -> Option<&AggregateRecord> {
        let per_cell = self.metrics.len();
        let base = (rho_idx * self.p0_grid.len() + p0_idx) * per_cell;
        self.aggregates[base..base + per_cell].iter().find(|a| a.metric == metric)
    }

    /// Metric value of one segment along the rho axis for fixed `p0_idx`.
    pub fn curve(&self, p0_idx: usize, segment: usize, metric: MetricKind) -> Vec<Option<f64>> {
        (0..self.rho_grid.len()).map(|r| self.cell(r, p0_idx, segment).value(metric)).collect()
    }

    /// Mean curve along rho for fixed `p0_idx`.
    pub fn mean_curve(&self, p0_idx: usize, metric: MetricKind) -> Vec<Option<f64>> {
        (0..self.rho_grid.len()).map(|r| self.aggregate(r, p0_idx, metric).and_then(|a| a.mean)).collect()
    }

    /// Aggregates recomputed from the per-cell records.
    pub fn recompute_aggregates(&self) -> Vec<AggregateRecord> {
        aggregate(&self.rho_grid, &self.p0_grid, self.n_segments, &self.metrics, &self.cells)
    }
}

fn aggregate(
    rho_grid: &[f64],
    p0_grid: &[f64],
    n_segments: usize,
    metrics: &[MetricKind],
    cells: &[CellRecord],
) -> Vec<AggregateRecord> {
    let mut out = Vec::with_capacity(rho_grid.len() * p0_grid.len() * metrics.len());
    for (r, &rho) in rho_grid.iter().enumerate() {
        for (p, &p0) in p0_grid.iter().enumerate() {
            let base = (r * p0_grid.len() + p) * n_segments;
            let row = &cells[base..base + n_segments];
            for &metric in metrics {
                let values: Vec<f64> = row.iter().filter_map(|c| c.value(metric)).collect();
                let count = values.len();
                let (mean, std) = if count == 0 {
                    (None, None)
                } else {
                    let mean = values.iter().sum::<f64>() / count as f64;
                    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / count as f64;
                    (Some(mean), Some(var.sqrt()))
                };
                out.push(AggregateRecord { rho, p0, metric, mean, std, count });
            }
        }
    }
    out
}

/// Builds the PVG of every segment at every `(rho, p0)` and records the
/// enabled metrics per cell plus cross-segment aggregates.
///
/// Obstruction heights are computed once per segment and shared by all of
/// its cells. A failing metric is recorded on its cell; the sweep goes on.
pub fn run_sweep(segments: &[NormalizedSeries], cfg: &SweepConfig) -> Result<SweepResult> {
    cfg.validate()?;
    if segments.is_empty() {
        return Err(PvgError::Config("sweep needs at least one segment".into()));
    }
    let metrics = cfg.sorted_metrics();
    let (n_rho, n_p0, n_seg) = (cfg.rho_grid.len(), cfg.p0_grid.len(), segments.len());
    let grid: Vec<(usize, usize)> = (0..n_rho).flat_map(|r| (0..n_p0).map(move |p| (r, p))).collect();

    let mut by_segment: Vec<Vec<CellRecord>> = Vec::with_capacity(n_seg);
    for (s, seg) in segments.iter().enumerate() {
        log::info!("segment {}/{}: {} samples", s + 1, n_seg, seg.len());
        let heights = ObstructionHeights::compute(seg);
        let cells: Vec<CellRecord> = grid
            .par_iter()
            .map(|&(r, p)| {
                let (rho, p0) = (cfg.rho_grid[r], cfg.p0_grid[p]);
                let adj = heights.adjacency(&PvgParams { rho, p0 });
                let (m, issues) = compute_local(&adj, &metrics);
                CellRecord { rho, p0, segment_id: s, metrics: Some(m), issues, error: None }
            })
            .collect();
        by_segment.push(cells);
    }

    let mut cells = Vec::with_capacity(n_rho * n_p0 * n_seg);
    for g in 0..grid.len() {
        for seg_cells in &by_segment {
            cells.push(seg_cells[g].clone());
        }
    }

    // The random baseline depends only on the node and edge counts, so each
    // distinct pair is computed once and shared by every cell that has it.
    let keys: BTreeSet<(usize, usize)> = cells
        .iter()
        .filter_map(|c| c.metrics.as_ref())
        .filter(|m| wants_baseline(m, &metrics))
        .map(|m| (m.n_nodes, m.n_edges))
        .collect();
    let baselines: BTreeMap<(usize, usize), std::result::Result<(f64, f64), String>> = match &cfg.baseline {
        Some(base) => {
            log::info!("{} random baselines", keys.len());
            keys.into_par_iter()
                .map(|(n, e)| ((n, e), gnm_baseline(n, e, base).map_err(|err| err.to_string())))
                .collect()
        }
        None => BTreeMap::new(),
    };
    for cell in &mut cells {
        if let Some(m) = cell.metrics.as_mut() {
            finish_sigma(m, &mut cell.issues, &metrics, |n, e| {
                cfg.baseline.as_ref().and_then(|_| baselines.get(&(n, e)).cloned())
            });
        }
    }

    let aggregates = aggregate(&cfg.rho_grid, &cfg.p0_grid, n_seg, &metrics, &cells);
    Ok(SweepResult {
        rho_grid: cfg.rho_grid.clone(),
        p0_grid: cfg.p0_grid.clone(),
        n_segments: n_seg,
        metrics,
        cells,
        aggregates,
    })
}

/// AM signal → normalize → sweep on the single full series.
pub fn am_sweep(params: &AmSignalParams, cfg: &SweepConfig) -> Result<SweepResult> {
    let signal = generate_am(params)?;
    run_sweep(&[normalize(&signal)], cfg)
}

/// Recording → preprocess into segments → normalize each → sweep.
pub fn segmented_sweep(recording: &TimeSeries, pre_cfg: &PreprocessConfig, cfg: &SweepConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let segments: Vec<NormalizedSeries> = preprocess(recording, pre_cfg)?.iter().map(normalize).collect();
    run_sweep(&segments, cfg)
}
