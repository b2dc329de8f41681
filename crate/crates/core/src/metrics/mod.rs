//! Network statistics on binary adjacency matrices.

mod clustering;
mod paths;
mod power_law;
mod random;
mod small_world;

pub use clustering::{clustering_coefficient, local_clustering};
pub use paths::{avg_path_length, connected_components, largest_component};
pub use power_law::{degree_distribution, fit_power_law, power_law_exponent, PowerLawFit};
pub use random::gnm_random_graph;
pub use small_world::{gnm_baseline, random_baseline, small_worldness, BaselineConfig, SmallWorld};

use serde::{Deserialize, Serialize};

use crate::error::PvgError;
use crate::graph::{degree_sequence, Adjacency};

/// Scalar statistics of one graph. Metrics that were not requested, or are
/// undefined for this graph, are `None` and serialize as `null`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphMetrics {
    pub n_nodes: usize,
    pub n_edges: usize,
    pub density: f64,
    pub mean_degree: f64,
    pub k_max: usize,
    #[serde(rename = "L")]
    pub avg_path_length: Option<f64>,
    #[serde(rename = "C")]
    pub clustering: Option<f64>,
    pub sigma: Option<f64>,
    #[serde(rename = "C_rand")]
    pub c_rand: Option<f64>,
    #[serde(rename = "L_rand")]
    pub l_rand: Option<f64>,
    pub gamma: Option<f64>,
    pub gamma_r2: Option<f64>,
}

/// Metrics a sweep can be asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MetricKind {
    #[serde(rename = "L")]
    PathLength,
    #[serde(rename = "C")]
    Clustering,
    #[serde(rename = "density")]
    Density,
    #[serde(rename = "mean_degree")]
    MeanDegree,
    #[serde(rename = "k_max")]
    KMax,
    #[serde(rename = "sigma")]
    Sigma,
    #[serde(rename = "gamma")]
    Gamma,
}

impl MetricKind {
    pub const ALL: [MetricKind; 7] = [
        MetricKind::PathLength,
        MetricKind::Clustering,
        MetricKind::Density,
        MetricKind::MeanDegree,
        MetricKind::KMax,
        MetricKind::Sigma,
        MetricKind::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MetricKind::PathLength => "L",
            MetricKind::Clustering => "C",
            MetricKind::Density => "density",
            MetricKind::MeanDegree => "mean_degree",
            MetricKind::KMax => "k_max",
            MetricKind::Sigma => "sigma",
            MetricKind::Gamma => "gamma",
        }
    }

    pub fn value(self, m: &GraphMetrics) -> Option<f64> {
        match self {
            MetricKind::PathLength => m.avg_path_length,
            MetricKind::Clustering => m.clustering,
            MetricKind::Density => Some(m.density),
            MetricKind::MeanDegree => Some(m.mean_degree),
            MetricKind::KMax => Some(m.k_max as f64),
            MetricKind::Sigma => m.sigma,
            MetricKind::Gamma => m.gamma,
        }
    }
}

/// Why a requested metric is absent from a [`GraphMetrics`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricIssue {
    pub metric: MetricKind,
    pub reason: String,
}

/// Computes the requested metrics. Failures of individual metrics leave
/// them `None` and are reported as issues; counts, density and degrees are
/// always filled.
pub fn compute_selected(
    adj: &Adjacency,
    baseline: Option<&BaselineConfig>,
    wanted: &[MetricKind],
) -> (GraphMetrics, Vec<MetricIssue>) {
    let (mut m, mut issues) = compute_local(adj, wanted);
    finish_sigma(&mut m, &mut issues, wanted, |n, e| {
        baseline.map(|cfg| small_world::gnm_baseline(n, e, cfg).map_err(|err| err.to_string()))
    });
    (m, issues)
}

/// Every requested metric except sigma. When sigma is requested, clustering
/// and path length are computed regardless, for [`finish_sigma`].
pub(crate) fn compute_local(adj: &Adjacency, wanted: &[MetricKind]) -> (GraphMetrics, Vec<MetricIssue>) {
    let n = adj.n();
    let n_edges = adj.edge_count();
    let degrees = degree_sequence(adj);
    let mut m = GraphMetrics {
        n_nodes: n,
        n_edges,
        density: if n < 2 { 0.0 } else { 2.0 * n_edges as f64 / (n * (n - 1)) as f64 },
        mean_degree: if n == 0 { 0.0 } else { 2.0 * n_edges as f64 / n as f64 },
        k_max: degrees.iter().copied().max().unwrap_or(0),
        avg_path_length: None,
        clustering: None,
        sigma: None,
        c_rand: None,
        l_rand: None,
        gamma: None,
        gamma_r2: None,
    };
    let mut issues = Vec::new();
    let mut note = |metric, err: PvgError| issues.push(MetricIssue { metric, reason: err.to_string() });
    let want = |k| wanted.contains(&k);

    let need_sigma = want(MetricKind::Sigma);
    if want(MetricKind::PathLength) || need_sigma {
        match avg_path_length(adj) {
            Ok(l) => m.avg_path_length = Some(l),
            Err(e) => note(MetricKind::PathLength, e),
        }
    }
    if want(MetricKind::Clustering) || need_sigma {
        match clustering_coefficient(adj) {
            Ok(c) => m.clustering = Some(c),
            Err(e) => note(MetricKind::Clustering, e),
        }
    }
    if want(MetricKind::Gamma) {
        match power_law_exponent(&degrees) {
            Ok(fit) => {
                m.gamma = Some(fit.gamma);
                m.gamma_r2 = Some(fit.r2);
            }
            Err(e) => note(MetricKind::Gamma, e),
        }
    }
    (m, issues)
}

/// Whether [`finish_sigma`] will ask for a baseline for `m`.
pub(crate) fn wants_baseline(m: &GraphMetrics, wanted: &[MetricKind]) -> bool {
    wanted.contains(&MetricKind::Sigma) && m.clustering.is_some() && m.avg_path_length.is_some()
}

/// Fills sigma from `baseline(n_nodes, n_edges)` (`None`: no baseline
/// configured), then drops clustering and path length if they were only
/// computed for sigma.
pub(crate) fn finish_sigma(
    m: &mut GraphMetrics,
    issues: &mut Vec<MetricIssue>,
    wanted: &[MetricKind],
    baseline: impl FnOnce(usize, usize) -> Option<std::result::Result<(f64, f64), String>>,
) {
    if wanted.contains(&MetricKind::Sigma) {
        let mut note = |reason: String| issues.push(MetricIssue { metric: MetricKind::Sigma, reason });
        match (m.clustering, m.avg_path_length) {
            (Some(c), Some(l)) => match baseline(m.n_nodes, m.n_edges) {
                Some(Ok(base)) => match small_world::sigma_against(c, l, base) {
                    Ok(sw) => {
                        m.sigma = Some(sw.sigma);
                        m.c_rand = Some(sw.c_rand);
                        m.l_rand = Some(sw.l_rand);
                    }
                    Err(e) => note(e.to_string()),
                },
                Some(Err(reason)) => note(reason),
                None => note(PvgError::Config("no baseline configured".into()).to_string()),
            },
            _ => note(PvgError::InvalidParams("needs both clustering and path length".into()).to_string()),
        }
    }
    if !wanted.contains(&MetricKind::PathLength) {
        m.avg_path_length = None;
    }
    if !wanted.contains(&MetricKind::Clustering) {
        m.clustering = None;
    }
}

/// Every metric; sigma only when a baseline is given.
pub fn compute_all(adj: &Adjacency, baseline: Option<&BaselineConfig>) -> GraphMetrics {
    let wanted: Vec<MetricKind> =
        MetricKind::ALL.into_iter().filter(|&k| k != MetricKind::Sigma || baseline.is_some()).collect();
    compute_selected(adj, baseline, &wanted).0
}
