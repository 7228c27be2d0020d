//! Upper bounds for the graph edit distance: populate an LSAPE instance over
//! the node sets from local-structure distances (or a trained likelihood),
//! solve it, and return the cheapest induced edit cost.

use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::costs::CostModel;
use crate::error::{Error, Result};
use crate::graph::{GraphCollection, LabeledGraph};
use crate::lsape::{enumerate_optimal, solve_greedy, LsapeInstance};
use crate::ml::{self, OneClassSvmModel};
use crate::node_map::{upper_bound_from_solutions, NodeMap};
use crate::par;
use crate::rings::{build_all_rings, RingSet};
use crate::set_distance::{
    edge_set_distance, ring_distance, AlphaWeights, LambdaWeights, SetDistanceKind,
};

/// The available instantiations of the pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Ring distances with optimal LSAPE set distances.
    RingOpt,
    /// Ring distances with greedy LSAPE set distances.
    RingGd,
    /// Ring distances with multiset set distances.
    RingMs,
    /// Ring feature vectors scored by a trained one-class SVM.
    RingMl,
    /// Node label cost plus half the incident-edge set distance.
    BranchLike,
    /// Node label costs only.
    NodeOnly,
}

impl Method {
    pub fn needs_rings(&self) -> bool {
        matches!(
            self,
            Method::RingOpt | Method::RingGd | Method::RingMs | Method::RingMl
        )
    }

    pub fn needs_model(&self) -> bool {
        *self == Method::RingMl
    }

    fn set_distance_kind(&self) -> SetDistanceKind {
        match self {
            Method::RingGd => SetDistanceKind::LsapeGreedy,
            Method::RingMs => SetDistanceKind::Multiset,
            _ => SetDistanceKind::LsapeOptimal,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Method::RingOpt => "ring_opt",
            Method::RingGd => "ring_gd",
            Method::RingMs => "ring_ms",
            Method::RingMl => "ring_ml",
            Method::BranchLike => "branch_like",
            Method::NodeOnly => "node_only",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ring_opt" => Ok(Method::RingOpt),
            "ring_gd" => Ok(Method::RingGd),
            "ring_ms" => Ok(Method::RingMs),
            "ring_ml" => Ok(Method::RingMl),
            "branch_like" => Ok(Method::BranchLike),
            "node_only" => Ok(Method::NodeOnly),
            other => Err(Error::InvalidConfig(format!("unknown method '{other}'"))),
        }
    }
}

/// Learned ring parameters, persisted as JSON by the trainer.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingParams {
    pub l: usize,
    pub alpha: AlphaWeights,
    pub lambda: LambdaWeights,
}

impl RingParams {
    pub fn uniform(l: usize) -> Self {
        Self {
            l,
            alpha: AlphaWeights::uniform(),
            lambda: LambdaWeights::uniform(l),
        }
    }
}

#[derive(Clone, Debug)]
pub struct HeuristicConfig {
    pub method: Method,
    pub l: usize,
    pub alpha: AlphaWeights,
    pub lambda: LambdaWeights,
    pub num_solutions: usize,
    pub greedy_final_solve: bool,
    /// Set-distance kind used inside ring_ml feature vectors.
    pub ml_feature_kind: SetDistanceKind,
}

impl HeuristicConfig {
    /// Uniform weights, a single LSAPE solution, optimal final solve.
    pub fn new(method: Method, l: usize) -> Self {
        Self {
            method,
            l,
            alpha: AlphaWeights::uniform(),
            lambda: LambdaWeights::uniform(l.max(1)),
            num_solutions: 1,
            greedy_final_solve: false,
            ml_feature_kind: SetDistanceKind::LsapeOptimal,
        }
    }

    pub fn with_ring_params(method: Method, params: &RingParams) -> Self {
        Self {
            method,
            l: params.l,
            alpha: params.alpha,
            lambda: params.lambda.clone(),
            num_solutions: 1,
            greedy_final_solve: false,
            ml_feature_kind: SetDistanceKind::LsapeOptimal,
        }
    }

    pub fn with_solutions(mut self, s: usize) -> Self {
        self.num_solutions = s;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.l < 1 {
            return Err(Error::InvalidConfig("ring size must be at least 1".into()));
        }
        if self.num_solutions < 1 {
            return Err(Error::InvalidConfig(
                "number of solutions must be at least 1".into(),
            ));
        }
        if self.method.needs_rings() && self.lambda.len() != self.l {
            return Err(Error::InvalidConfig(format!(
                "lambda has {} levels but the ring size is {}",
                self.lambda.len(),
                self.l
            )));
        }
        Ok(())
    }
}

/// Classical instance population: `(n+1) x (m+1)` matrix filled from a total
/// distance function over node pairs including the dummy side. Rows are
/// computed in parallel when the `parallel` feature is on.
pub fn populate_instance<F>(n: usize, m: usize, distance: F) -> Result<LsapeInstance>
where
    F: Fn(Option<usize>, Option<usize>) -> f64 + Sync + Send,
{
    let rows = par::map_range(n + 1, |i| {
        let u = (i < n).then_some(i);
        (0..=m)
            .map(|k| {
                let v = (k < m).then_some(k);
                match (u, v) {
                    (None, None) => 0.0,
                    _ => distance(u, v),
                }
            })
            .collect::<Vec<f64>>()
    });
    LsapeInstance::new(n, m, rows.concat())
}

/// Node label cost plus half the optimal set distance between the incident
/// edge label sets; the dummy side contributes an empty edge set.
pub fn branch_like_distance(
    g: &LabeledGraph,
    h: &LabeledGraph,
    u: Option<usize>,
    v: Option<usize>,
    costs: &dyn CostModel,
) -> f64 {
    let node = match (u, v) {
        (Some(u), Some(v)) => costs.node_sub(g.node_label(u), h.node_label(v)),
        (Some(u), None) => costs.node_del(g.node_label(u)),
        (None, Some(v)) => costs.node_ins(h.node_label(v)),
        (None, None) => 0.0,
    };
    let edges_g = u.map(|u| g.incident_edges(u)).unwrap_or_default();
    let edges_h = v.map(|v| h.incident_edges(v)).unwrap_or_default();
    let edges = edge_set_distance(
        g,
        h,
        &edges_g,
        &edges_h,
        costs,
        SetDistanceKind::LsapeOptimal,
    );
    node + 0.5 * edges
}

/// Result of one bound computation. `seconds` covers instance population,
/// solving, and inducing the edit cost (plus ring construction when
/// [`upper_bound`] built the rings itself).
#[derive(Clone, Debug)]
pub struct BoundResult {
    pub bound: f64,
    pub node_map: NodeMap,
    pub seconds: f64,
}

/// Computes an upper bound for `GED(g, h)`, building rings as needed.
pub fn upper_bound(
    g: &LabeledGraph,
    h: &LabeledGraph,
    cfg: &HeuristicConfig,
    costs: &dyn CostModel,
    model: Option<&OneClassSvmModel>,
) -> Result<BoundResult> {
    cfg.validate()?;
    let start = Instant::now();
    let rings = if cfg.method.needs_rings() {
        Some((build_all_rings(g, cfg.l)?, build_all_rings(h, cfg.l)?))
    } else {
        None
    };
    let mut result = bound_for_pair(
        g,
        h,
        rings.as_ref().map(|(a, b)| (a, b)),
        cfg,
        costs,
        model,
    )?;
    result.seconds = start.elapsed().as_secs_f64();
    Ok(result)
}

/// Like [`upper_bound`] but with prebuilt rings, so callers iterating over
/// many pairs construct each graph's rings once.
pub fn upper_bound_with_rings(
    g: &LabeledGraph,
    h: &LabeledGraph,
    rings_g: &RingSet,
    rings_h: &RingSet,
    cfg: &HeuristicConfig,
    costs: &dyn CostModel,
    model: Option<&OneClassSvmModel>,
) -> Result<BoundResult> {
    cfg.validate()?;
    bound_for_pair(g, h, Some((rings_g, rings_h)), cfg, costs, model)
}

fn bound_for_pair(
    g: &LabeledGraph,
    h: &LabeledGraph,
    rings: Option<(&RingSet, &RingSet)>,
    cfg: &HeuristicConfig,
    costs: &dyn CostModel,
    model: Option<&OneClassSvmModel>,
) -> Result<BoundResult> {
    let start = Instant::now();
    let (n, m) = (g.node_count(), h.node_count());
    let instance = match cfg.method {
        Method::NodeOnly => populate_instance(n, m, |u, v| match (u, v) {
            (Some(u), Some(v)) => costs.node_sub(g.node_label(u), h.node_label(v)),
            (Some(u), None) => costs.node_del(g.node_label(u)),
            (None, Some(v)) => costs.node_ins(h.node_label(v)),
            (None, None) => 0.0,
        })?,
        Method::BranchLike => {
            populate_instance(n, m, |u, v| branch_like_distance(g, h, u, v, costs))?
        }
        Method::RingOpt | Method::RingGd | Method::RingMs => {
            let (rings_g, rings_h) = rings.ok_or(Error::InvalidConfig(
                "ring method called without rings".into(),
            ))?;
            check_ring_sizes(cfg, rings_g, rings_h)?;
            let kind = cfg.method.set_distance_kind();
            populate_instance(n, m, |u, v| {
                ring_distance(
                    g,
                    h,
                    rings_g.ring(u),
                    rings_h.ring(v),
                    &cfg.alpha,
                    &cfg.lambda,
                    kind,
                    costs,
                )
                .expect("ring sizes checked above")
            })?
        }
        Method::RingMl => {
            let model = model.ok_or(Error::MissingModel)?;
            let (rings_g, rings_h) = rings.ok_or(Error::InvalidConfig(
                "ring method called without rings".into(),
            ))?;
            check_ring_sizes(cfg, rings_g, rings_h)?;
            ml::populate_instance_ml(g, h, model, rings_g, rings_h, costs, cfg.ml_feature_kind)?
        }
    };

    let solutions = if cfg.greedy_final_solve {
        vec![solve_greedy(&instance).0]
    } else {
        enumerate_optimal(&instance, cfg.num_solutions)
    };
    let (bound, node_map) = upper_bound_from_solutions(g, h, &solutions, costs)?;
    Ok(BoundResult {
        bound,
        node_map,
        seconds: start.elapsed().as_secs_f64(),
    })
}

fn check_ring_sizes(cfg: &HeuristicConfig, rings_g: &RingSet, rings_h: &RingSet) -> Result<()> {
    for set in [rings_g, rings_h] {
        if set.size() != cfg.l {
            return Err(Error::RingSizeMismatch {
                expected: cfg.l,
                got: set.size(),
            });
        }
    }
    Ok(())
}

/// Bound for one ordered pair of a collection.
#[derive(Clone, Debug)]
pub struct PairBound {
    pub g_index: usize,
    pub h_index: usize,
    pub bound: f64,
    pub seconds: f64,
}

fn ordered_pairs(len: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(len.saturating_mul(len.saturating_sub(1)));
    for i in 0..len {
        for j in 0..len {
            if i != j {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

fn prepare_rings(
    coll: &GraphCollection,
    cfg: &HeuristicConfig,
) -> Result<Option<Vec<RingSet>>> {
    if !cfg.method.needs_rings() {
        return Ok(None);
    }
    par::try_map_slice(&coll.graphs, |g| build_all_rings(g, cfg.l)).map(Some)
}

/// Bounds for every ordered pair `(G, H)` with `G != H`, in `(i, j)` order.
/// Rings are built once per graph up front; pairs are processed in parallel
/// when the `parallel` feature is on, with identical results either way.
pub fn pairwise_bounds(
    coll: &GraphCollection,
    cfg: &HeuristicConfig,
    costs: &dyn CostModel,
    model: Option<&OneClassSvmModel>,
) -> Result<Vec<PairBound>> {
    cfg.validate()?;
    let rings = prepare_rings(coll, cfg)?;
    let pairs = ordered_pairs(coll.len());
    par::try_map_slice(&pairs, |&(i, j)| {
        pair_bound(coll, rings.as_deref(), cfg, costs, model, i, j)
    })
}

/// Sequential twin of [`pairwise_bounds`]; the benchmark suite compares the
/// two paths.
pub fn pairwise_bounds_seq(
    coll: &GraphCollection,
    cfg: &HeuristicConfig,
    costs: &dyn CostModel,
    model: Option<&OneClassSvmModel>,
) -> Result<Vec<PairBound>> {
    cfg.validate()?;
    let rings = match cfg.method.needs_rings() {
        true => Some(
            coll.graphs
                .iter()
                .map(|g| build_all_rings(g, cfg.l))
                .collect::<Result<Vec<_>>>()?,
        ),
        false => None,
    };
    ordered_pairs(coll.len())
        .into_iter()
        .map(|(i, j)| pair_bound(coll, rings.as_deref(), cfg, costs, model, i, j))
        .collect()
}

fn pair_bound(
    coll: &GraphCollection,
    rings: Option<&[RingSet]>,
    cfg: &HeuristicConfig,
    costs: &dyn CostModel,
    model: Option<&OneClassSvmModel>,
    i: usize,
    j: usize,
) -> Result<PairBound> {
    let result = bound_for_pair(
        &coll.graphs[i],
        &coll.graphs[j],
        rings.map(|r| (&r[i], &r[j])),
        cfg,
        costs,
        model,
    )?;
    Ok(PairBound {
        g_index: i,
        h_index: j,
        bound: result.bound,
        seconds: result.seconds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::costs::{ConstantCosts, LetterCosts};
    use crate::exact::exact_ged;
    use crate::fixtures::{self, unlabeled_graph};
    use crate::graph::Label;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Instance entries as printed in the source figure for the letter pair.
    const LETTER_INSTANCE: [[f64; 5]; 6] = [
        [0.177, 1.406, 1.208, 0.468, 0.675],
        [1.203, 0.272, 1.403, 0.832, 0.675],
        [1.226, 1.180, 0.260, 1.259, 0.675],
        [0.788, 0.705, 1.346, 0.390, 0.675],
        [1.135, 0.369, 0.906, 0.902, 0.675],
        [0.675, 0.675, 0.675, 0.675, 0.0],
    ];

    fn node_only_instance(
        g: &LabeledGraph,
        h: &LabeledGraph,
        costs: &dyn CostModel,
    ) -> LsapeInstance {
        populate_instance(g.node_count(), h.node_count(), |u, v| match (u, v) {
            (Some(u), Some(v)) => costs.node_sub(g.node_label(u), h.node_label(v)),
            (Some(u), None) => costs.node_del(g.node_label(u)),
            (None, Some(v)) => costs.node_ins(h.node_label(v)),
            (None, None) => 0.0,
        })
        .unwrap()
    }

    #[test]
    fn node_only_population_matches_letter_figure() {
        let (g, h) = fixtures::letter_pair();
        let instance = node_only_instance(&g, &h, &LetterCosts::new());
        for (i, row) in LETTER_INSTANCE.iter().enumerate() {
            for (k, &expected) in row.iter().enumerate() {
                let got = instance.cost(i, k);
                assert!(
                    (got - expected).abs() <= 0.001,
                    "cell ({i},{k}): got {got}, expected {expected}"
                );
            }
        }
    }

    #[test]
    fn ring_instance_has_zero_diagonal_on_identical_graphs() {
        let g = unlabeled_graph("g", 4, &[(0, 1), (1, 2), (1, 3)]);
        let cfg = HeuristicConfig::new(Method::RingOpt, 3);
        let rings = build_all_rings(&g, 3).unwrap();
        let instance = populate_instance(4, 4, |u, v| {
            ring_distance(
                &g,
                &g,
                rings.ring(u),
                rings.ring(v),
                &cfg.alpha,
                &cfg.lambda,
                SetDistanceKind::LsapeOptimal,
                &ConstantCosts::uniform(),
            )
            .unwrap()
        })
        .unwrap();
        for i in 0..4 {
            assert_eq!(instance.cost(i, i), 0.0);
        }
    }

    #[test]
    fn single_node_pair_gives_two_by_two_instance() {
        let g = unlabeled_graph("g", 1, &[]);
        let h = unlabeled_graph("h", 1, &[]);
        let instance = node_only_instance(&g, &h, &ConstantCosts::uniform());
        assert_eq!((instance.rows(), instance.cols()), (1, 1));
        assert_eq!(instance.cost(1, 1), 0.0);
    }

    #[test]
    fn self_bound_is_zero_for_every_method() {
        let (g, _) = fixtures::letter_pair();
        for method in [
            Method::RingOpt,
            Method::RingGd,
            Method::RingMs,
            Method::BranchLike,
            Method::NodeOnly,
        ] {
            let cfg = HeuristicConfig::new(method, 3);
            let res = upper_bound(&g, &g, &cfg, &LetterCosts::new(), None).unwrap();
            assert_eq!(res.bound, 0.0, "{method:?}");
        }
    }

    #[test]
    fn letter_node_only_bound_composes_node_and_edge_part() {
        let (g, h) = fixtures::letter_pair();
        let cfg = HeuristicConfig::new(Method::NodeOnly, 1);
        let res = upper_bound(&g, &h, &cfg, &LetterCosts::new(), None).unwrap();
        assert!((res.bound - (1.774 + 0.850)).abs() < 0.004, "{}", res.bound);
        for i in 0..4 {
            assert_eq!(res.node_map.image(i), Some(i));
        }
        assert_eq!(res.node_map.image(4), None);
    }

    #[test]
    fn branch_like_examples() {
        let costs = LetterCosts::new();
        let g = LabeledGraph::new(
            "g",
            vec![Label::vector([0.0, 0.0]); 3],
            vec![
                (0, 1, Label::symbol("1")),
                (0, 2, Label::symbol("1")),
            ],
        )
        .unwrap();
        let h = LabeledGraph::new("h", vec![Label::vector([0.0, 0.0])], vec![]).unwrap();

        // same label, same (empty) incident edges
        assert_eq!(branch_like_distance(&h, &h, Some(0), Some(0), &costs), 0.0);
        // two unlabeled edges against none: node cost 0 + half of 0.850
        let d = branch_like_distance(&g, &h, Some(0), Some(0), &costs);
        assert!((d - 0.425).abs() < 1e-12, "{d}");
        // dummy row: insertion cost plus half the insertion of v's edges
        let e = branch_like_distance(&h, &g, None, Some(0), &costs);
        assert!((e - (0.675 + 0.425)).abs() < 1e-12, "{e}");
    }

    fn random_graph(rng: &mut impl Rng, n: usize) -> LabeledGraph {
        let nodes = (0..n)
            .map(|_| Label::symbol(format!("{}", rng.gen_range(0..3))))
            .collect();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(0.4) {
                    edges.push((a, b, Label::symbol("1")));
                }
            }
        }
        LabeledGraph::new("r", nodes, edges).unwrap()
    }

    #[test]
    fn bounds_are_valid_and_tighten_with_more_solutions() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let costs = ConstantCosts::uniform();
        for _ in 0..25 {
            let (n, m) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
            let g = random_graph(&mut rng, n);
            let h = random_graph(&mut rng, m);
            let (exact, _) = exact_ged(&g, &h, &costs).unwrap();
            let single = upper_bound(
                &g,
                &h,
                &HeuristicConfig::new(Method::RingOpt, 2),
                &costs,
                None,
            )
            .unwrap();
            let many = upper_bound(
                &g,
                &h,
                &HeuristicConfig::new(Method::RingOpt, 2).with_solutions(10),
                &costs,
                None,
            )
            .unwrap();
            assert!(single.bound >= exact - 1e-9);
            assert!(many.bound >= exact - 1e-9);
            assert!(many.bound <= single.bound + 1e-9);
        }
    }

    #[test]
    fn reported_bound_matches_induced_cost_of_reported_map() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let costs = ConstantCosts::uniform();
        for method in [
            Method::RingOpt,
            Method::RingGd,
            Method::RingMs,
            Method::BranchLike,
            Method::NodeOnly,
        ] {
            let g = random_graph(&mut rng, 5);
            let h = random_graph(&mut rng, 4);
            let cfg = HeuristicConfig::new(method, 2).with_solutions(3);
            let res = upper_bound(&g, &h, &cfg, &costs, None).unwrap();
            let induced =
                crate::node_map::induced_edit_cost(&g, &h, &res.node_map, &costs).unwrap();
            assert_eq!(res.bound, induced, "{method:?}");
        }
    }

    #[test]
    fn greedy_final_solve_returns_a_valid_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let costs = ConstantCosts::uniform();
        let g = random_graph(&mut rng, 5);
        let h = random_graph(&mut rng, 5);
        let mut cfg = HeuristicConfig::new(Method::RingOpt, 2);
        cfg.greedy_final_solve = true;
        let res = upper_bound(&g, &h, &cfg, &costs, None).unwrap();
        let (exact, _) = exact_ged(&g, &h, &costs).unwrap();
        assert!(res.bound >= exact - 1e-9);
    }

    /// With L = 1, lambda = (1), alpha = (1/2, 0, 1/2) and all degrees <= 1,
    /// every normalizer is 1 and the ring and branch-like instances pick
    /// optimal assignments with the same support.
    #[test]
    fn size_one_ring_matches_branch_support_on_low_degree_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let costs = ConstantCosts::uniform();
        for _ in 0..20 {
            // disjoint unions of single edges and isolated nodes
            let n = rng.gen_range(1..=6);
            let mut edges = Vec::new();
            let mut v = 0;
            while v + 1 < n {
                if rng.gen_bool(0.6) {
                    edges.push((v, v + 1));
                    v += 2;
                } else {
                    v += 1;
                }
            }
            let g = unlabeled_graph("g", n, &edges);
            let m = rng.gen_range(1..=6);
            let mut edges_h = Vec::new();
            let mut w = 0;
            while w + 1 < m {
                if rng.gen_bool(0.4) {
                    edges_h.push((w, w + 1));
                    w += 2;
                } else {
                    w += 1;
                }
            }
            let h = unlabeled_graph("h", m, &edges_h);

            let mut cfg = HeuristicConfig::new(Method::RingOpt, 1);
            cfg.alpha = AlphaWeights::new([0.5, 0.0, 0.5]).unwrap();
            let ring = upper_bound(&g, &h, &cfg, &costs, None).unwrap();
            let branch = upper_bound(
                &g,
                &h,
                &HeuristicConfig::new(Method::BranchLike, 1),
                &costs,
                None,
            )
            .unwrap();
            assert_eq!(
                ring.node_map.row_map(),
                branch.node_map.row_map(),
                "n={n} m={m} edges={edges:?} edges_h={edges_h:?}"
            );
        }
    }

    #[test]
    fn pairwise_bounds_cover_ordered_pairs_deterministically() {
        let coll = fixtures::letter_collection();
        let cfg = HeuristicConfig::new(Method::RingOpt, 3).with_solutions(2);
        let costs = LetterCosts::new();
        let par = pairwise_bounds(&coll, &cfg, &costs, None).unwrap();
        let seq = pairwise_bounds_seq(&coll, &cfg, &costs, None).unwrap();
        assert_eq!(par.len(), 2);
        assert_eq!(seq.len(), 2);
        for (a, b) in par.iter().zip(&seq) {
            assert_eq!((a.g_index, a.h_index), (b.g_index, b.h_index));
            assert_eq!(a.bound, b.bound);
        }
        // direct call through the single-pair API must agree
        let direct = upper_bound(&coll.graphs[0], &coll.graphs[1], &cfg, &costs, None).unwrap();
        assert_eq!(par[0].bound, direct.bound);
    }

    #[test]
    fn config_validation_errors() {
        let bad = HeuristicConfig::new(Method::RingOpt, 0);
        assert!(bad.validate().is_err());
        let mut mismatched = HeuristicConfig::new(Method::RingOpt, 2);
        mismatched.lambda = LambdaWeights::uniform(3);
        assert!(mismatched.validate().is_err());
        let (g, h) = fixtures::letter_pair();
        let cfg = HeuristicConfig::new(Method::RingMl, 2);
        assert!(matches!(
            upper_bound(&g, &h, &cfg, &LetterCosts::new(), None),
            Err(Error::MissingModel)
        ));
        assert!("walks".parse::<Method>().is_err());
        assert_eq!("ring_ms".parse::<Method>().unwrap(), Method::RingMs);
    }
}
