//! Machine-learning instantiation: feature vectors over ring pairs, a
//! one-class SVM with RBF kernel trained on assignments from good node maps,
//! and LSAPE instances populated from the learned likelihood.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::costs::CostModel;
use crate::error::{Error, Result};
use crate::graph::{GraphCollection, LabeledGraph};
use crate::lsape::LsapeInstance;
use crate::node_map::NodeMap;
use crate::par;
use crate::rings::{build_all_rings, RingSet};
use crate::set_distance::{edge_set_distance, node_set_distance, SetDistanceKind};

pub const GLOBAL_FEATURES: usize = 10;

/// Feature vectors have six per-level features plus ten global ones.
pub fn feature_dimension(l: usize) -> usize {
    6 * l + GLOBAL_FEATURES
}

/// Per-pair feature extraction. The ten global features (graph sizes and
/// average deletion/insertion/substitution costs) are computed once at
/// construction; each node assignment then contributes six features per
/// level: the three size differences and the three set distances between the
/// layers.
pub struct FeatureExtractor<'a> {
    g: &'a LabeledGraph,
    h: &'a LabeledGraph,
    rings_g: &'a RingSet,
    rings_h: &'a RingSet,
    costs: &'a dyn CostModel,
    kind: SetDistanceKind,
    globals: [f64; GLOBAL_FEATURES],
}

impl<'a> FeatureExtractor<'a> {
    pub fn new(
        g: &'a LabeledGraph,
        h: &'a LabeledGraph,
        rings_g: &'a RingSet,
        rings_h: &'a RingSet,
        costs: &'a dyn CostModel,
        kind: SetDistanceKind,
    ) -> Result<Self> {
        if rings_g.size() != rings_h.size() {
            return Err(Error::RingSizeMismatch {
                expected: rings_g.size(),
                got: rings_h.size(),
            });
        }
        let avg = |total: f64, count: usize| if count == 0 { 0.0 } else { total / count as f64 };
        let (n, m) = (g.node_count(), h.node_count());
        let (eg, eh) = (g.edge_count(), h.edge_count());
        let node_del = avg(
            (0..n).map(|u| costs.node_del(g.node_label(u))).sum(),
            n,
        );
        let edge_del = avg(g.edges().iter().map(|e| costs.edge_del(&e.label)).sum(), eg);
        let node_ins = avg(
            (0..m).map(|v| costs.node_ins(h.node_label(v))).sum(),
            m,
        );
        let edge_ins = avg(h.edges().iter().map(|e| costs.edge_ins(&e.label)).sum(), eh);
        let mut node_sub = 0.0;
        for u in 0..n {
            for v in 0..m {
                node_sub += costs.node_sub(g.node_label(u), h.node_label(v));
            }
        }
        let node_sub = avg(node_sub, n * m);
        let mut edge_sub = 0.0;
        for e in g.edges() {
            for f in h.edges() {
                edge_sub += costs.edge_sub(&e.label, &f.label);
            }
        }
        let edge_sub = avg(edge_sub, eg * eh);
        Ok(Self {
            g,
            h,
            rings_g,
            rings_h,
            costs,
            kind,
            globals: [
                n as f64, eg as f64, m as f64, eh as f64, node_del, edge_del, node_ins, edge_ins,
                node_sub, edge_sub,
            ],
        })
    }

    pub fn dimension(&self) -> usize {
        feature_dimension(self.rings_g.size())
    }

    /// Feature vector for the node assignment `(u, v)`; at most one side may
    /// be the dummy node.
    pub fn features(&self, u: Option<usize>, v: Option<usize>) -> Vec<f64> {
        assert!(
            u.is_some() || v.is_some(),
            "(dummy, dummy) is not a node assignment"
        );
        let ring_g = self.rings_g.ring(u);
        let ring_h = self.rings_h.ring(v);
        let mut x = Vec::with_capacity(self.dimension());
        x.extend_from_slice(&self.globals);
        for l in 0..ring_g.size() {
            let lg = &ring_g.layers[l];
            let lh = &ring_h.layers[l];
            x.push(lg.nodes.len() as f64 - lh.nodes.len() as f64);
            x.push(lg.outer_edges.len() as f64 - lh.outer_edges.len() as f64);
            x.push(lg.inner_edges.len() as f64 - lh.inner_edges.len() as f64);
            x.push(node_set_distance(
                self.g, self.h, &lg.nodes, &lh.nodes, self.costs, self.kind,
            ));
            x.push(edge_set_distance(
                self.g,
                self.h,
                &lg.outer_edges,
                &lh.outer_edges,
                self.costs,
                self.kind,
            ));
            x.push(edge_set_distance(
                self.g,
                self.h,
                &lg.inner_edges,
                &lh.inner_edges,
                self.costs,
                self.kind,
            ));
        }
        x
    }
}

/// Convenience wrapper building one feature vector; pair-level work is
/// redone on every call, so batch callers should use [`FeatureExtractor`].
pub fn extract_features(
    g: &LabeledGraph,
    h: &LabeledGraph,
    u: Option<usize>,
    v: Option<usize>,
    rings_g: &RingSet,
    rings_h: &RingSet,
    costs: &dyn CostModel,
    kind: SetDistanceKind,
) -> Result<Vec<f64>> {
    Ok(FeatureExtractor::new(g, h, rings_g, rings_h, costs, kind)?.features(u, v))
}

/// A trained one-class SVM with RBF kernel: the dual weights and support
/// vectors of a Gaussian mixture over feature vectors of good assignments.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OneClassSvmModel {
    pub gamma: f64,
    pub dim: usize,
    pub duals: Vec<f64>,
    pub support_vectors: Vec<Vec<f64>>,
}

impl OneClassSvmModel {
    pub fn validate(&self) -> Result<()> {
        if self.gamma <= 0.0 || !self.gamma.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "gamma must be positive, got {}",
                self.gamma
            )));
        }
        if self.duals.len() != self.support_vectors.len() {
            return Err(Error::InvalidConfig(format!(
                "{} duals for {} support vectors",
                self.duals.len(),
                self.support_vectors.len()
            )));
        }
        if self.duals.iter().any(|&a| a < 0.0 || !a.is_finite()) {
            return Err(Error::InvalidConfig("negative dual weight".into()));
        }
        if self.duals.iter().sum::<f64>() <= 0.0 {
            return Err(Error::InvalidConfig("dual weights sum to zero".into()));
        }
        if let Some(sv) = self.support_vectors.iter().find(|sv| sv.len() != self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: sv.len(),
            });
        }
        Ok(())
    }

    /// Likelihood of `x` under the Gaussian mixture, clamped to `[0, 1]`.
    /// Evaluated in log space so that tiny normalization constants and far
    /// probes do not underflow to spurious zeros.
    pub fn likelihood(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let dual_sum: f64 = self.duals.iter().sum();
        let log_norm = 0.5 * self.dim as f64 * (self.gamma / std::f64::consts::PI).ln()
            - dual_sum.ln();
        let mut terms = Vec::with_capacity(self.duals.len());
        for (alpha, sv) in self.duals.iter().zip(&self.support_vectors) {
            if *alpha <= 0.0 {
                continue;
            }
            let dist_sq: f64 = sv.iter().zip(x).map(|(a, b)| (a - b) * (a - b)).sum();
            terms.push(alpha.ln() - self.gamma * dist_sq);
        }
        let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if max == f64::NEG_INFINITY {
            return Ok(0.0);
        }
        let log_sum = max + terms.iter().map(|t| (t - max).exp()).sum::<f64>().ln();
        Ok((log_norm + log_sum).exp().clamp(0.0, 1.0))
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self)?)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let model: Self = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        model.validate()?;
        Ok(model)
    }
}

fn rbf(gamma: f64, a: &[f64], b: &[f64]) -> f64 {
    let dist_sq: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum();
    (-gamma * dist_sq).exp()
}

/// Training outcome with diagnostics: the dual vector over the full
/// training set (zeros included) and the final pairwise KKT violation.
pub struct SvmTrainResult {
    pub model: OneClassSvmModel,
    pub alpha: Vec<f64>,
    pub kkt_violation: f64,
}

/// Trains the one-class dual `min 1/2 a^T K a` subject to
/// `0 <= a_i <= 1/(nu n)` and `sum a_i = 1` by pairwise coordinate updates:
/// each step moves mass from the most over-weighted to the most
/// under-weighted coordinate until the KKT violation drops below 1e-3.
/// Fully deterministic.
pub fn train_one_class_svm(
    training: &[Vec<f64>],
    nu: f64,
    gamma: f64,
) -> Result<OneClassSvmModel> {
    train_one_class_svm_detailed(training, nu, gamma).map(|r| r.model)
}

pub fn train_one_class_svm_detailed(
    training: &[Vec<f64>],
    nu: f64,
    gamma: f64,
) -> Result<SvmTrainResult> {
    if training.is_empty() {
        return Err(Error::EmptyInput("one-class SVM training set"));
    }
    if !(0.0..=1.0).contains(&nu) || nu == 0.0 {
        return Err(Error::InvalidConfig(format!("nu must be in (0, 1], got {nu}")));
    }
    if gamma <= 0.0 || !gamma.is_finite() {
        return Err(Error::InvalidConfig(format!("gamma must be positive, got {gamma}")));
    }
    let n = training.len();
    let dim = training[0].len();
    if let Some(bad) = training.iter().find(|x| x.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: bad.len(),
        });
    }

    let cap = 1.0 / (nu * n as f64);
    let kernel: Vec<f64> = {
        let rows = par::map_range(n, |i| {
            (0..n)
                .map(|j| rbf(gamma, &training[i], &training[j]))
                .collect::<Vec<f64>>()
        });
        rows.concat()
    };

    let mut alpha = vec![1.0 / n as f64; n];
    // gradient of the objective: (K alpha)_i
    let mut grad: Vec<f64> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| kernel[i * n + j] * alpha[j])
                .sum::<f64>()
        })
        .collect();

    const TOL: f64 = 1e-3;
    const MAX_ITER: usize = 100_000;
    const BOX_EPS: f64 = 1e-12;
    let violating_pair = |alpha: &[f64], grad: &[f64]| {
        let mut up = usize::MAX; // can receive mass
        let mut down = usize::MAX; // can give mass
        for i in 0..n {
            if alpha[i] < cap - BOX_EPS && (up == usize::MAX || grad[i] < grad[up]) {
                up = i;
            }
            if alpha[i] > BOX_EPS && (down == usize::MAX || grad[i] > grad[down]) {
                down = i;
            }
        }
        (up, down)
    };
    for _ in 0..MAX_ITER {
        let (up, down) = violating_pair(&alpha, &grad);
        if up == usize::MAX || down == usize::MAX || grad[down] - grad[up] < TOL {
            break;
        }
        let curvature = kernel[up * n + up] + kernel[down * n + down] - 2.0 * kernel[up * n + down];
        let mut step = if curvature > BOX_EPS {
            (grad[down] - grad[up]) / curvature
        } else {
            f64::INFINITY
        };
        step = step.min(cap - alpha[up]).min(alpha[down]);
        if step <= 0.0 {
            break;
        }
        alpha[up] += step;
        alpha[down] -= step;
        for i in 0..n {
            grad[i] += step * (kernel[i * n + up] - kernel[i * n + down]);
        }
    }
    let kkt_violation = {
        let (up, down) = violating_pair(&alpha, &grad);
        if up == usize::MAX || down == usize::MAX {
            0.0
        } else {
            (grad[down] - grad[up]).max(0.0)
        }
    };

    let mut duals = Vec::new();
    let mut support_vectors = Vec::new();
    for (a, x) in alpha.iter().zip(training) {
        if *a > BOX_EPS {
            duals.push(*a);
            support_vectors.push(x.clone());
        }
    }
    let total: f64 = duals.iter().sum();
    for a in &mut duals {
        *a /= total;
    }
    let model = OneClassSvmModel {
        gamma,
        dim,
        duals,
        support_vectors,
    };
    model.validate()?;
    Ok(SvmTrainResult {
        model,
        alpha,
        kkt_violation,
    })
}

fn populate_from_likelihood<F>(n: usize, m: usize, p: F) -> Result<LsapeInstance>
where
    F: Fn(Option<usize>, Option<usize>) -> f64 + Sync + Send,
{
    crate::heuristics::populate_instance(n, m, |u, v| 1.0 - p(u, v))
}

/// ML instance population: every cell is one minus the likelihood of the
/// assignment's feature vector, so all entries lie in `[0, 1]`.
pub fn populate_instance_ml(
    g: &LabeledGraph,
    h: &LabeledGraph,
    model: &OneClassSvmModel,
    rings_g: &RingSet,
    rings_h: &RingSet,
    costs: &dyn CostModel,
    kind: SetDistanceKind,
) -> Result<LsapeInstance> {
    let extractor = FeatureExtractor::new(g, h, rings_g, rings_h, costs, kind)?;
    if model.dim != extractor.dimension() {
        return Err(Error::DimensionMismatch {
            expected: model.dim,
            got: extractor.dimension(),
        });
    }
    populate_from_likelihood(g.node_count(), h.node_count(), |u, v| {
        model
            .likelihood(&extractor.features(u, v))
            .expect("dimension checked above")
    })
}

/// One training node map for an ordered pair of collection graphs.
#[derive(Clone, Debug)]
pub struct TrainingMap {
    pub g_index: usize,
    pub h_index: usize,
    pub map: NodeMap,
    pub cost: f64,
}

/// Computes one node map per ordered pair (self-pairs included): the exact
/// optimum when the pair fits under `oracle_budget` total nodes, otherwise
/// the best map found by ring_opt with ten LSAPE solutions and uniform
/// weights.
pub fn generate_training_maps(
    coll: &GraphCollection,
    costs: &dyn CostModel,
    oracle_budget: usize,
) -> Result<Vec<TrainingMap>> {
    use crate::heuristics::{upper_bound, HeuristicConfig, Method};

    let diameters: Vec<usize> = coll
        .graphs
        .iter()
        .map(|g| Ok(build_all_rings(g, 1)?.diameter))
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for i in 0..coll.len() {
        for j in 0..coll.len() {
            pairs.push((i, j));
        }
    }
    par::try_map_slice(&pairs, |&(i, j)| {
        let g = &coll.graphs[i];
        let h = &coll.graphs[j];
        if g.node_count() + h.node_count() <= oracle_budget {
            let (cost, map) = crate::exact::exact_ged_with_cap(g, h, costs, oracle_budget)?;
            Ok(TrainingMap {
                g_index: i,
                h_index: j,
                map,
                cost,
            })
        } else {
            let l = diameters[i].max(diameters[j]) + 1;
            let cfg = HeuristicConfig::new(Method::RingOpt, l).with_solutions(10);
            let res = upper_bound(g, h, &cfg, costs, None)?;
            Ok(TrainingMap {
                g_index: i,
                h_index: j,
                map: res.node_map,
                cost: res.bound,
            })
        }
    })
}

/// Feature vectors of every assignment contained in the training maps.
pub struct TrainingSet {
    pub vectors: Vec<Vec<f64>>,
    pub l: usize,
    pub dim: usize,
}

pub fn build_training_set(
    coll: &GraphCollection,
    maps: &[TrainingMap],
    costs: &dyn CostModel,
    kind: SetDistanceKind,
    l: usize,
) -> Result<TrainingSet> {
    let rings: Vec<RingSet> = coll
        .graphs
        .iter()
        .map(|g| build_all_rings(g, l))
        .collect::<Result<Vec<_>>>()?;
    let mut vectors = Vec::new();
    for tm in maps {
        let g = &coll.graphs[tm.g_index];
        let h = &coll.graphs[tm.h_index];
        let extractor = FeatureExtractor::new(
            g,
            h,
            &rings[tm.g_index],
            &rings[tm.h_index],
            costs,
            kind,
        )?;
        for u in 0..g.node_count() {
            vectors.push(extractor.features(Some(u), tm.map.image(u)));
        }
        for v in 0..h.node_count() {
            if tm.map.preimage(v).is_none() {
                vectors.push(extractor.features(None, Some(v)));
            }
        }
    }
    Ok(TrainingSet {
        vectors,
        l,
        dim: feature_dimension(l),
    })
}

/// End-to-end training: good maps, their assignment features at
/// `L = 1 + max diameter`, then a one-class SVM with `gamma = 1/dim`.
pub fn train_ring_ml_model(
    coll: &GraphCollection,
    costs: &dyn CostModel,
    oracle_budget: usize,
    nu: f64,
    kind: SetDistanceKind,
) -> Result<(OneClassSvmModel, usize)> {
    if coll.is_empty() {
        return Err(Error::EmptyInput("training collection"));
    }
    let maps = generate_training_maps(coll, costs, oracle_budget)?;
    let mut max_diam = 0;
    for g in &coll.graphs {
        max_diam = max_diam.max(build_all_rings(g, 1)?.diameter);
    }
    let l = max_diam + 1;
    let training = build_training_set(coll, &maps, costs, kind, l)?;
    let gamma = 1.0 / training.dim as f64;
    let model = train_one_class_svm(&training.vectors, nu, gamma)?;
    Ok((model, l))
}
