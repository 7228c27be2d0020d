//! Distances between node sets, edge sets, layers, and rings.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::costs::CostModel;
use crate::error::{Error, Result};
use crate::graph::{Label, LabeledGraph};
use crate::lsape::{solve_greedy, solve_optimal, LsapeInstance};
use crate::rings::{Layer, Ring};

/// Entries below this threshold do not count towards a weight's support.
pub const SUPPORT_EPS: f64 = 1e-6;

const SIMPLEX_TOL: f64 = 1e-6;

/// How node and edge set distances are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetDistanceKind {
    /// Exact cost of an optimal LSAPE solution over the label sets.
    LsapeOptimal,
    /// Cost of a greedy LSAPE solution; cheaper, never below the optimum.
    LsapeGreedy,
    /// Multiset-intersection proxy with averaged costs.
    Multiset,
}

/// Simplex weights for the three layer components: nodes, inner edges, outer
/// edges.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaWeights(pub [f64; 3]);

impl AlphaWeights {
    pub fn new(weights: [f64; 3]) -> Result<Self> {
        validate_simplex(&weights)?;
        Ok(Self(weights))
    }

    pub fn uniform() -> Self {
        Self([1.0 / 3.0; 3])
    }
}

/// Simplex weights over the ring levels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LambdaWeights(pub Vec<f64>);

impl LambdaWeights {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("lambda must not be empty".into()));
        }
        validate_simplex(&weights)?;
        Ok(Self(weights))
    }

    pub fn uniform(levels: usize) -> Self {
        assert!(levels > 0, "lambda needs at least one level");
        Self(vec![1.0 / levels as f64; levels])
    }

    pub fn one_hot(levels: usize, level: usize) -> Self {
        assert!(level < levels);
        let mut w = vec![0.0; levels];
        w[level] = 1.0;
        Self(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Levels with weight above [`SUPPORT_EPS`].
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&l| self.0[l] > SUPPORT_EPS).collect()
    }
}

fn validate_simplex(weights: &[f64]) -> Result<()> {
    if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::InvalidWeights(format!(
            "weights must be non-negative, got {weights:?}"
        )));
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > SIMPLEX_TOL {
        return Err(Error::InvalidWeights(format!(
            "weights must sum to 1, got {sum}"
        )));
    }
    Ok(())
}

/// Generic set distance over two label lists with the given substitution,
/// deletion and insertion costs.
fn label_set_distance(
    labels_g: &[&Label],
    labels_h: &[&Label],
    sub: &dyn Fn(&Label, &Label) -> f64,
    del: &dyn Fn(&Label) -> f64,
    ins: &dyn Fn(&Label) -> f64,
    kind: SetDistanceKind,
) -> f64 {
    match kind {
        SetDistanceKind::LsapeOptimal | SetDistanceKind::LsapeGreedy => {
            let (n, m) = (labels_g.len(), labels_h.len());
            let instance = LsapeInstance::from_fn(n, m, |i, k| match (i == n, k == m) {
                (false, false) => sub(labels_g[i], labels_h[k]),
                (false, true) => del(labels_g[i]),
                (true, false) => ins(labels_h[k]),
                (true, true) => 0.0,
            })
            .expect("cost models return finite values");
            if kind == SetDistanceKind::LsapeGreedy {
                solve_greedy(&instance).1
            } else {
                solve_optimal(&instance).1
            }
        }
        SetDistanceKind::Multiset => multiset_distance(labels_g, labels_h, sub, del, ins),
    }
}

/// Multiset proxy: size differences priced at the average deletion or
/// insertion cost, plus the average differing-pair substitution cost times
/// the number of unmatched labels under multiset intersection.
fn multiset_distance(
    labels_g: &[&Label],
    labels_h: &[&Label],
    sub: &dyn Fn(&Label, &Label) -> f64,
    del: &dyn Fn(&Label) -> f64,
    ins: &dyn Fn(&Label) -> f64,
) -> f64 {
    let (n, m) = (labels_g.len(), labels_h.len());

    let avg = |total: f64, count: usize| if count == 0 { 0.0 } else { total / count as f64 };
    let avg_del = avg(labels_g.iter().map(|l| del(l)).sum(), n);
    let avg_ins = avg(labels_h.iter().map(|l| ins(l)).sum(), m);

    let mut sub_total = 0.0;
    let mut sub_count = 0usize;
    for a in labels_g {
        for b in labels_h {
            if a.key() != b.key() {
                sub_total += sub(a, b);
                sub_count += 1;
            }
        }
    }
    let avg_sub = avg(sub_total, sub_count);

    let mut counts: HashMap<_, usize> = HashMap::new();
    for l in labels_g {
        *counts.entry(l.key()).or_default() += 1;
    }
    let mut intersection = 0usize;
    for l in labels_h {
        if let Some(c) = counts.get_mut(&l.key()) {
            if *c > 0 {
                *c -= 1;
                intersection += 1;
            }
        }
    }

    let mut total = 0.0;
    if n > m {
        total += avg_del * (n - m) as f64;
    }
    if n < m {
        total += avg_ins * (m - n) as f64;
    }
    total + avg_sub * (n.min(m) - intersection) as f64
}

/// Distance between two node sets under the node edit costs.
pub fn node_set_distance(
    g: &LabeledGraph,
    h: &LabeledGraph,
    nodes_g: &[usize],
    nodes_h: &[usize],
    costs: &dyn CostModel,
    kind: SetDistanceKind,
) -> f64 {
    let labels_g: Vec<&Label> = nodes_g.iter().map(|&u| g.node_label(u)).collect();
    let labels_h: Vec<&Label> = nodes_h.iter().map(|&v| h.node_label(v)).collect();
    label_set_distance(
        &labels_g,
        &labels_h,
        &|a, b| costs.node_sub(a, b),
        &|a| costs.node_del(a),
        &|b| costs.node_ins(b),
        kind,
    )
}

/// Distance between two edge sets under the edge edit costs.
pub fn edge_set_distance(
    g: &LabeledGraph,
    h: &LabeledGraph,
    edges_g: &[(usize, usize)],
    edges_h: &[(usize, usize)],
    costs: &dyn CostModel,
    kind: SetDistanceKind,
) -> f64 {
    let labels_g: Vec<&Label> = edges_g
        .iter()
        .map(|&(a, b)| g.edge_label(a, b).expect("edge set entry is a graph edge"))
        .collect();
    let labels_h: Vec<&Label> = edges_h
        .iter()
        .map(|&(a, b)| h.edge_label(a, b).expect("edge set entry is a graph edge"))
        .collect();
    label_set_distance(
        &labels_g,
        &labels_h,
        &|a, b| costs.edge_sub(a, b),
        &|a| costs.edge_del(a),
        &|b| costs.edge_ins(b),
        kind,
    )
}

/// Weighted sum of the three normalized component distances of two layers.
pub fn layer_distance(
    g: &LabeledGraph,
    h: &LabeledGraph,
    layer_g: &Layer,
    layer_h: &Layer,
    alpha: &AlphaWeights,
    kind: SetDistanceKind,
    costs: &dyn CostModel,
) -> f64 {
    let [nodes, inner, outer] = layer_components(g, h, layer_g, layer_h, kind, costs);
    alpha.0[0] * nodes + alpha.0[1] * inner + alpha.0[2] * outer
}

/// The three normalized component distances (nodes, inner edges, outer
/// edges) of a layer pair, before weighting by alpha.
pub fn layer_components(
    g: &LabeledGraph,
    h: &LabeledGraph,
    layer_g: &Layer,
    layer_h: &Layer,
    kind: SetDistanceKind,
    costs: &dyn CostModel,
) -> [f64; 3] {
    let norm = |len_g: usize, len_h: usize| len_g.max(len_h).max(1) as f64;
    let nodes = node_set_distance(g, h, &layer_g.nodes, &layer_h.nodes, costs, kind)
        / norm(layer_g.nodes.len(), layer_h.nodes.len());
    let inner = edge_set_distance(g, h, &layer_g.inner_edges, &layer_h.inner_edges, costs, kind)
        / norm(layer_g.inner_edges.len(), layer_h.inner_edges.len());
    let outer = edge_set_distance(g, h, &layer_g.outer_edges, &layer_h.outer_edges, costs, kind)
        / norm(layer_g.outer_edges.len(), layer_h.outer_edges.len());
    [nodes, inner, outer]
}

/// Ring distance: the lambda-weighted sum of the layer distances. Levels
/// with zero weight are skipped entirely.
pub fn ring_distance(
    g: &LabeledGraph,
    h: &LabeledGraph,
    ring_g: &Ring,
    ring_h: &Ring,
    alpha: &AlphaWeights,
    lambda: &LambdaWeights,
    kind: SetDistanceKind,
    costs: &dyn CostModel,
) -> Result<f64> {
    if ring_g.size() != lambda.len() || ring_h.size() != lambda.len() {
        return Err(Error::RingSizeMismatch {
            expected: lambda.len(),
            got: if ring_g.size() != lambda.len() {
                ring_g.size()
            } else {
                ring_h.size()
            },
        });
    }
    let mut total = 0.0;
    for (l, &weight) in lambda.0.iter().enumerate() {
        if weight == 0.0 {
            continue;
        }
        total += weight
            * layer_distance(g, h, &ring_g.layers[l], &ring_h.layers[l], alpha, kind, costs);
    }
    Ok(total)
}
