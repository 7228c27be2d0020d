//! Learning the ring parameters `L`, `alpha`, `lambda` by derivative-free
//! minimization over the product of two probability simplices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::costs::CostModel;
use crate::error::{Error, Result};
use crate::graph::GraphCollection;
use crate::heuristics::RingParams;
use crate::lsape::{solve_optimal, LsapeInstance};
use crate::node_map::induced_edit_cost;
use crate::par;
use crate::rings::build_all_rings;
use crate::set_distance::{
    layer_components, AlphaWeights, LambdaWeights, SetDistanceKind, SUPPORT_EPS,
};

#[derive(Clone, Debug)]
pub struct LearnConfig {
    /// Trade-off between tightness (small) and sparse lambda support for
    /// runtime (large).
    pub mu: f64,
    pub kind: SetDistanceKind,
    /// Number of random simplex starts besides the uniform one.
    pub restarts: usize,
    pub seed: u64,
}

impl Default for LearnConfig {
    fn default() -> Self {
        Self {
            mu: 1.0,
            kind: SetDistanceKind::LsapeOptimal,
            restarts: 4,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LearnedParams {
    pub params: RingParams,
    /// Objective value at the returned parameters.
    pub objective: f64,
    /// Ring size before the final support-based truncation, i.e. one plus
    /// the largest training diameter.
    pub initial_l: usize,
}

fn multiplier(mu: f64, support: usize, l: usize) -> f64 {
    mu + (1.0 - mu) * (support.saturating_sub(1)) as f64 / l.saturating_sub(1).max(1) as f64
}

/// The training objective: the support-penalized sum of ring bounds (single
/// LSAPE solution) over all ordered pairs of training graphs.
pub fn objective_f(
    coll: &GraphCollection,
    costs: &dyn CostModel,
    alpha: &AlphaWeights,
    lambda: &LambdaWeights,
    l: usize,
    mu: f64,
    kind: SetDistanceKind,
) -> Result<f64> {
    if lambda.len() != l {
        return Err(Error::InvalidConfig(format!(
            "lambda has {} levels for ring size {l}",
            lambda.len()
        )));
    }
    let cache = PairCache::build(coll, costs, l, kind)?;
    Ok(multiplier(mu, lambda.support().len(), l) * cache.bound_sum(costs, &alpha.0, &lambda.0))
}

/// Per-pair tensors of normalized layer component distances. The components
/// do not depend on `alpha` or `lambda`, so one optimizer evaluation reduces
/// to cheap dot products, an LSAPE solve, and the induced cost per pair.
struct PairCache<'a> {
    coll: &'a GraphCollection,
    l: usize,
    pairs: Vec<CachedPair>,
}

struct CachedPair {
    g: usize,
    h: usize,
    n: usize,
    m: usize,
    /// `(n+1) * (m+1) * l` component triples, row-major over cells.
    comp: Vec<[f64; 3]>,
}

impl<'a> PairCache<'a> {
    fn build(
        coll: &'a GraphCollection,
        costs: &dyn CostModel,
        l: usize,
        kind: SetDistanceKind,
    ) -> Result<Self> {
        let rings = par::try_map_slice(&coll.graphs, |g| build_all_rings(g, l))?;
        let mut index_pairs = Vec::new();
        for i in 0..coll.len() {
            for j in 0..coll.len() {
                index_pairs.push((i, j));
            }
        }
        let pairs = par::try_map_slice(&index_pairs, |&(i, j)| {
            let g = &coll.graphs[i];
            let h = &coll.graphs[j];
            let (n, m) = (g.node_count(), h.node_count());
            let mut comp = Vec::with_capacity((n + 1) * (m + 1) * l);
            for row in 0..=n {
                let u = (row < n).then_some(row);
                for col in 0..=m {
                    let v = (col < m).then_some(col);
                    let ring_g = rings[i].ring(u);
                    let ring_h = rings[j].ring(v);
                    for level in 0..l {
                        if u.is_none() && v.is_none() {
                            comp.push([0.0; 3]);
                        } else {
                            comp.push(layer_components(
                                g,
                                h,
                                &ring_g.layers[level],
                                &ring_h.layers[level],
                                kind,
                                costs,
                            ));
                        }
                    }
                }
            }
            Ok(CachedPair { g: i, h: j, n, m, comp })
        })?;
        Ok(Self { coll, l, pairs })
    }

    fn bound_sum(&self, costs: &dyn CostModel, alpha: &[f64; 3], lambda: &[f64]) -> f64 {
        let sums = par::map_range(self.pairs.len(), |p| {
            let pair = &self.pairs[p];
            let (n, m) = (pair.n, pair.m);
            let l = self.l;
            let instance = LsapeInstance::from_fn(n, m, |i, k| {
                let base = (i * (m + 1) + k) * l;
                let mut cell = 0.0;
                for (level, &lam) in lambda.iter().enumerate() {
                    if lam == 0.0 {
                        continue;
                    }
                    let c = &pair.comp[base + level];
                    cell += lam * (alpha[0] * c[0] + alpha[1] * c[1] + alpha[2] * c[2]);
                }
                cell
            })
            .expect("cached components are finite");
            let (map, _) = solve_optimal(&instance);
            induced_edit_cost(
                &self.coll.graphs[pair.g],
                &self.coll.graphs[pair.h],
                &map,
                costs,
            )
            .expect("optimal solution is a valid node map")
        });
        sums.into_iter().sum()
    }
}

/// Samples a uniform point on the simplex (normalized unit exponentials).
fn sample_simplex(rng: &mut impl Rng, dim: usize) -> Vec<f64> {
    let mut draws: Vec<f64> = (0..dim)
        .map(|_| {
            let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            -u.ln()
        })
        .collect();
    let sum: f64 = draws.iter().sum();
    for d in &mut draws {
        *d /= sum;
    }
    draws
}

/// Learns `(L, alpha, lambda)`: rings are built at one plus the largest
/// training diameter, the objective is minimized by coordinate-pair exchange
/// descent (mass `delta` moved between two coordinates, `delta` halved from
/// 0.25 until below 1e-3) from the uniform point and `restarts` random
/// simplex points, and `L` is finally lowered to one plus the largest level
/// in lambda's support.
pub fn learn_ring_params(
    coll: &GraphCollection,
    costs: &dyn CostModel,
    cfg: &LearnConfig,
) -> Result<LearnedParams> {
    if coll.is_empty() {
        return Err(Error::EmptyInput("training collection"));
    }
    if !(0.0..=1.0).contains(&cfg.mu) {
        return Err(Error::InvalidConfig(format!("mu must be in [0, 1], got {}", cfg.mu)));
    }
    let mut max_diam = 0;
    for g in &coll.graphs {
        max_diam = max_diam.max(build_all_rings(g, 1)?.diameter);
    }
    let initial_l = max_diam + 1;
    let cache = PairCache::build(coll, costs, initial_l, cfg.kind)?;

    let eval = |alpha: &[f64; 3], lambda: &[f64]| -> f64 {
        let support = lambda.iter().filter(|&&w| w > SUPPORT_EPS).count();
        multiplier(cfg.mu, support, initial_l) * cache.bound_sum(costs, alpha, lambda)
    };

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut starts = vec![(
        [1.0 / 3.0; 3],
        vec![1.0 / initial_l as f64; initial_l],
    )];
    for _ in 0..cfg.restarts {
        let a = sample_simplex(&mut rng, 3);
        let lam = sample_simplex(&mut rng, initial_l);
        starts.push(([a[0], a[1], a[2]], lam));
    }

    let mut best_alpha = starts[0].0;
    let mut best_lambda = starts[0].1.clone();
    let mut best_value = f64::INFINITY;
    for (alpha0, lambda0) in starts {
        let (alpha, lambda, value) = descend(alpha0, lambda0, &eval);
        if value < best_value {
            best_value = value;
            best_alpha = alpha;
            best_lambda = lambda;
        }
    }

    // lower L to the top of lambda's support and renormalize
    let support_max = best_lambda
        .iter()
        .rposition(|&w| w > SUPPORT_EPS)
        .expect("a simplex vector has at least one sizable entry");
    let final_l = support_max + 1;
    best_lambda.truncate(final_l);
    let total: f64 = best_lambda.iter().sum();
    for w in &mut best_lambda {
        *w /= total;
    }

    let params = RingParams {
        l: final_l,
        alpha: AlphaWeights::new(best_alpha)?,
        lambda: LambdaWeights::new(best_lambda)?,
    };
    let objective = objective_f(
        coll,
        costs,
        &params.alpha,
        &params.lambda,
        final_l,
        cfg.mu,
        cfg.kind,
    )?;
    Ok(LearnedParams {
        params,
        objective,
        initial_l,
    })
}

/// Greedy first-improvement exchange search over both simplices.
fn descend(
    mut alpha: [f64; 3],
    mut lambda: Vec<f64>,
    eval: &dyn Fn(&[f64; 3], &[f64]) -> f64,
) -> ([f64; 3], Vec<f64>, f64) {
    const MIN_DELTA: f64 = 1e-3;
    const MAX_PASSES: usize = 32;
    let mut best = eval(&alpha, &lambda);
    let mut delta = 0.25;
    while delta >= MIN_DELTA {
        for _ in 0..MAX_PASSES {
            let mut improved = false;
            for from in 0..3 {
                for to in 0..3 {
                    if to == from || alpha[from] <= 0.0 {
                        continue;
                    }
                    let step = delta.min(alpha[from]);
                    let mut cand = alpha;
                    cand[from] -= step;
                    cand[to] += step;
                    let value = eval(&cand, &lambda);
                    if value < best - 1e-12 {
                        alpha = cand;
                        best = value;
                        improved = true;
                    }
                }
            }
            for from in 0..lambda.len() {
                for to in 0..lambda.len() {
                    if to == from || lambda[from] <= 0.0 {
                        continue;
                    }
                    let step = delta.min(lambda[from]);
                    let mut cand = lambda.clone();
                    cand[from] -= step;
                    cand[to] += step;
                    let value = eval(&alpha, &cand);
                    if value < best - 1e-12 {
                        lambda = cand;
                        best = value;
                        improved = true;
                    }
                }
            }
            if !improved {
                break;
            }
        }
        delta *= 0.5;
    }
    (alpha, lambda, best)
}
