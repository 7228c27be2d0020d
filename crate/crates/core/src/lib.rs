//! Upper bounds for the graph edit distance (GED) between labeled graphs.
//!
//! GED is transformed to the linear sum assignment problem with error
//! correction (LSAPE): a cost matrix over the two node sets (plus a dummy
//! row and column for insertions and deletions) is populated from distances
//! between per-node local structures, solved optimally or greedily, and the
//! solution is read back as a node map whose induced edit cost is a valid
//! upper bound. The local structures are rings: layered breadth-first
//! decompositions rooted at each node, compared layer by layer with
//! learnable simplex weights. A one-class SVM over ring feature vectors
//! provides an alternative, likelihood-based way to fill the matrix.

pub mod costs;
mod error;
pub mod exact;
pub mod fixtures;
pub mod graph;
pub mod heuristics;
pub mod knn;
pub mod lsape;
pub mod ml;
pub mod node_map;
mod par;
pub mod params;
pub mod rings;
pub mod set_distance;
pub mod synthetic;

pub use costs::{ConstantCosts, CostModel, LetterCosts};
pub use error::{Error, Result};
pub use graph::{load_collection, save_collection, GraphCollection, Label, LabelKind, LabeledGraph};
pub use heuristics::{
    pairwise_bounds, pairwise_bounds_seq, upper_bound, BoundResult, HeuristicConfig, Method,
    PairBound, RingParams,
};
pub use lsape::{
    assignment_cost, brute_force_cost, enumerate_optimal, solve_greedy, solve_optimal, Assignment,
    LsapeInstance,
};
pub use ml::{
    train_one_class_svm, train_one_class_svm_detailed, train_ring_ml_model, OneClassSvmModel,
};
pub use node_map::{induced_edit_cost, upper_bound_from_solutions, NodeMap};
pub use params::{learn_ring_params, objective_f, LearnConfig, LearnedParams};
pub use rings::{build_all_rings, build_ring, Layer, Ring, RingSet};
pub use set_distance::{
    edge_set_distance, layer_distance, node_set_distance, ring_distance, AlphaWeights,
    LambdaWeights, SetDistanceKind,
};
pub use synthetic::{generate_trees, SyntheticConfig};
