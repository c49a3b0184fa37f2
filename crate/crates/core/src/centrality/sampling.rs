use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{hypothesis_warnings, CentralityVector, EdgePowerVector, Method, SamplingInfo, Values};
use crate::error::{Error, Result};
use crate::exact::to_f64;
use crate::game::SymmetricGame;
use crate::graph::Graph;
use crate::unionfind::DisjointSets;

/// Generator name written into sampling metadata.
pub const SAMPLER_RNG: &str = "chacha8-rand_chacha-0.3";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    /// Independent generator streams. Output depends on this, not on the thread count.
    pub workers: usize,
}

impl McConfig {
    pub fn new(samples: u64, seed: u64) -> Self {
        McConfig {
            samples,
            seed,
            workers: 8,
        }
    }

    fn info(&self) -> SamplingInfo {
        SamplingInfo {
            rng: SAMPLER_RNG.to_string(),
            seed: self.seed,
            samples: self.samples,
            workers: self.workers,
        }
    }
}

#[derive(Clone)]
struct Moments {
    node_sum: Vec<f64>,
    node_sq: Vec<f64>,
    edge_sum: Vec<f64>,
    edge_sq: Vec<f64>,
}

impl Moments {
    fn new(n: usize, m: usize) -> Self {
        Moments {
            node_sum: vec![0.0; n],
            node_sq: vec![0.0; n],
            edge_sum: vec![0.0; m],
            edge_sq: vec![0.0; m],
        }
    }

    fn absorb(&mut self, other: &Moments) {
        for (a, b) in [
            (&mut self.node_sum, &other.node_sum),
            (&mut self.node_sq, &other.node_sq),
            (&mut self.edge_sum, &other.edge_sum),
            (&mut self.edge_sq, &other.edge_sq),
        ] {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        }
    }
}

fn run_stream(g: &Graph, table: &[f64], attachment: bool, cfg: &McConfig, stream: usize, count: u64) -> Moments {
    let (n, m) = (g.node_count(), g.edge_count());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream as u64);
    let mut order: Vec<usize> = (0..m).collect();
    let mut sets = DisjointSets::new(n);
    let mut marginal = vec![0.0; m];
    let mut node = vec![0.0; n];
    let mut acc = Moments::new(n, m);
    for _ in 0..count {
        order.shuffle(&mut rng);
        sets.reset();
        for &e in &order {
            let (a, b) = g.endpoints(e);
            marginal[e] = match sets.union(a, b) {
                Some(_) if attachment => 2.0,
                Some((x, y)) => table[x + y] - table[x] - table[y],
                None => 0.0,
            };
        }
        node.iter_mut().for_each(|v| *v = 0.0);
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let x = marginal[e];
            acc.edge_sum[e] += x;
            acc.edge_sq[e] += x * x;
            node[a] += 0.5 * x;
            node[b] += 0.5 * x;
        }
        for (v, &x) in node.iter().enumerate() {
            acc.node_sum[v] += x;
            acc.node_sq[v] += x * x;
        }
    }
    acc
}

fn mean_and_stderr(sum: &[f64], sq: &[f64], k: u64) -> (Vec<f64>, Vec<f64>) {
    let kf = k as f64;
    sum.iter()
        .zip(sq)
        .map(|(&s, &q)| {
            let mean = s / kf;
            let stderr = if k > 1 {
                let var = ((q - kf * mean * mean) / (kf - 1.0)).max(0.0);
                (var / kf).sqrt()
            } else {
                f64::NAN
            };
            (mean, stderr)
        })
        .unzip()
}

fn sample(g: &Graph, game: &SymmetricGame, cfg: &McConfig) -> Result<Moments> {
    if cfg.samples == 0 {
        return Err(Error::Precondition("samples must be at least 1".into()));
    }
    if cfg.workers == 0 {
        return Err(Error::Precondition("workers must be at least 1".into()));
    }
    let table: Vec<f64> = game.link_table(g.node_count())?.iter().map(to_f64).collect();
    let attachment = game.is_attachment();
    let w = cfg.workers as u64;
    let parts: Vec<Moments> = (0..cfg.workers)
        .into_par_iter()
        .map(|k| {
            let count = cfg.samples / w + u64::from((k as u64) < cfg.samples % w);
            run_stream(g, &table, attachment, cfg, k, count)
        })
        .collect();
    let mut total = Moments::new(g.node_count(), g.edge_count());
    for p in &parts {
        total.absorb(p);
    }
    Ok(total)
}

fn mc_method(game: &SymmetricGame) -> Method {
    if game.is_attachment() {
        Method::PositionAttachmentMc
    } else {
        Method::PositionMc
    }
}

/// Permutation-sampling estimate of position centrality with per-node standard errors.
pub fn position_centrality_mc(g: &Graph, game: &SymmetricGame, cfg: &McConfig) -> Result<CentralityVector> {
    let moments = sample(g, game, cfg)?;
    let (mean, stderr) = mean_and_stderr(&moments.node_sum, &moments.node_sq, cfg.samples);
    Ok(CentralityVector {
        method: mc_method(game),
        game: game.name().to_string(),
        values: Values::Sampled { mean, stderr },
        sampling: Some(cfg.info()),
        warnings: hypothesis_warnings(game, g.node_count())?,
    })
}

/// Permutation-sampling estimate of the link-game Shapley value of each edge.
pub fn edge_power_mc(g: &Graph, game: &SymmetricGame, cfg: &McConfig) -> Result<EdgePowerVector> {
    let moments = sample(g, game, cfg)?;
    let (mean, stderr) = mean_and_stderr(&moments.edge_sum, &moments.edge_sq, cfg.samples);
    Ok(EdgePowerVector {
        method: mc_method(game),
        game: game.name().to_string(),
        values: Values::Sampled { mean, stderr },
        sampling: Some(cfg.info()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_hub_estimate() {
        let pi = position_centrality_mc(&Graph::star(4), &SymmetricGame::messages(), &McConfig::new(20_000, 7))
            .unwrap();
        assert!((pi.as_f64()[0] - 6.0).abs() < 0.05);
        // every permutation of a star gives each spoke f(n)/(n-1) in total: zero variance on the hub
        assert!(pi.values.stderr().unwrap()[0] < 1e-9);
    }

    #[test]
    fn deterministic_per_config() {
        let g = crate::graph::two_communities();
        let cfg = McConfig::new(500, 3);
        let a = position_centrality_mc(&g, &SymmetricGame::messages(), &cfg).unwrap();
        let b = position_centrality_mc(&g, &SymmetricGame::messages(), &cfg).unwrap();
        assert_eq!(a, b);
        let c = position_centrality_mc(&g, &SymmetricGame::messages(), &McConfig::new(500, 4)).unwrap();
        assert_ne!(a.as_f64(), c.as_f64());
    }

    #[test]
    fn attachment_on_tree_is_exact() {
        // every edge of a forest always merges: PA = degree
        let t = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let pa = position_centrality_mc(&t, &SymmetricGame::attachment(), &McConfig::new(100, 1)).unwrap();
        assert_eq!(pa.as_f64(), vec![1.0, 3.0, 1.0, 2.0, 1.0]);
        assert_eq!(pa.method, Method::PositionAttachmentMc);
    }

    #[test]
    fn rejects_zero_samples() {
        assert!(position_centrality_mc(&Graph::chain(3), &SymmetricGame::messages(), &McConfig::new(0, 1)).is_err());
    }
}
