use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::clustering::clustering_coefficient;
use super::paths::{avg_path_length, largest_component};
use super::random::gnm_random_graph;
use crate::error::{PvgError, Result};
use crate::graph::Adjacency;

/// Random-graph baseline for small-worldness. Realization `r` draws from a
/// generator seeded with `rng_seed + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BaselineConfig {
    pub n_realizations: usize,
    pub rng_seed: u64,
}

impl Default for BaselineConfig {
    fn default() -> Self {
        Self { n_realizations: 20, rng_seed: 0 }
    }
}

impl BaselineConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_realizations == 0 {
            return Err(PvgError::InvalidParams("baseline needs at least one realization".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallWorld {
    pub sigma: f64,
    pub clustering: f64,
    pub path_length: f64,
    pub c_rand: f64,
    pub l_rand: f64,
}

/// Mean clustering and mean path length over G(n, m) realizations with the
/// node and edge counts of `adj`. Path lengths of disconnected realizations
/// are taken on their largest component.
pub fn random_baseline(adj: &Adjacency, cfg: &BaselineConfig) -> Result<(f64, f64)> {
    gnm_baseline(adj.n(), adj.edge_count(), cfg)
}

/// [`random_baseline`] for any graph with `n` nodes and `m` edges. The result
/// depends only on `(n, m, cfg)`, so callers may share it between graphs.
pub fn gnm_baseline(n: usize, m: usize, cfg: &BaselineConfig) -> Result<(f64, f64)> {
    cfg.validate()?;
    let samples: Vec<(f64, f64)> = (0..cfg.n_realizations)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed.wrapping_add(r as u64));
            let g = gnm_random_graph(n, m, &mut rng)?;
            let c = clustering_coefficient(&g)?;
            let lcc = largest_component(&g);
            let l = if lcc.n() < 2 { f64::NAN } else { avg_path_length(&lcc)? };
            Ok((c, l))
        })
        .collect::<Result<_>>()?;
    let k = samples.len() as f64;
    let c_rand = samples.iter().map(|s| s.0).sum::<f64>() / k;
    let l_rand = samples.iter().map(|s| s.1).sum::<f64>() / k;
    Ok((c_rand, l_rand))
}

/// `sigma = (C / C_rand) / (L / L_rand)` against an Erdos-Renyi baseline.
pub fn small_worldness(adj: &Adjacency, cfg: &BaselineConfig) -> Result<SmallWorld> {
    let path_length = avg_path_length(adj)?;
    let clustering = clustering_coefficient(adj)?;
    sigma_against(clustering, path_length, random_baseline(adj, cfg)?)
}

pub(crate) fn sigma_against(clustering: f64, path_length: f64, (c_rand, l_rand): (f64, f64)) -> Result<SmallWorld> {
    if c_rand == 0.0 || !l_rand.is_finite() {
        return Err(PvgError::DegenerateBaseline);
    }
    let sigma = (clustering / c_rand) / (path_length / l_rand);
    Ok(SmallWorld { sigma, clustering, path_length, c_rand, l_rand })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_is_exactly_one() {
        let sw = small_worldness(&Adjacency::complete(12), &BaselineConfig::default()).unwrap();
        assert_eq!(sw.sigma, 1.0);
        assert_eq!((sw.c_rand, sw.l_rand), (1.0, 1.0));
    }

    #[test]
    fn tree_has_degenerate_baseline() {
        // a path has so few edges that random graphs with 3 nodes / 2 edges
        // are always paths: zero clustering
        let err = small_worldness(&Adjacency::path(3), &BaselineConfig::default()).unwrap_err();
        assert!(matches!(err, PvgError::DegenerateBaseline));
    }

    #[test]
    fn seed_determines_result() {
        let g = Adjacency::from_edges(30, (0..30).flat_map(|i| [(i, (i + 1) % 30), (i, (i + 2) % 30)])).unwrap();
        let cfg = BaselineConfig { n_realizations: 5, rng_seed: 77 };
        assert_eq!(small_worldness(&g, &cfg).unwrap(), small_worldness(&g, &cfg).unwrap());
        assert!(small_worldness(&g, &BaselineConfig { n_realizations: 0, rng_seed: 0 }).is_err());
    }
}
