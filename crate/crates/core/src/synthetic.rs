//! Synthetic molecule-style datasets: pairwise non-isomorphic random trees
//! with node labels drawn from a small alphabet.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{GraphCollection, Label, LabelKind, LabeledGraph};

#[derive(Clone, Debug)]
pub struct SyntheticConfig {
    pub min_nodes: usize,
    pub max_nodes: usize,
    /// Node labels are drawn uniformly from `1..=alphabet_size`.
    pub alphabet_size: usize,
    pub count: usize,
    pub seed: u64,
}

/// Generates `count` pairwise non-isomorphic unlabeled-edge trees with
/// symbolic node labels. Tree shapes and labels come from two independent
/// seeded streams, so collections generated with the same seed but different
/// alphabet sizes share their shapes. Errors when the size range cannot
/// yield enough non-isomorphic trees, reporting how many were achievable.
pub fn generate_trees(cfg: &SyntheticConfig) -> Result<GraphCollection> {
    if cfg.count == 0 {
        return Err(Error::InvalidConfig("count must be at least 1".into()));
    }
    if cfg.alphabet_size == 0 {
        return Err(Error::InvalidConfig("alphabet size must be at least 1".into()));
    }
    if cfg.min_nodes == 0 || cfg.min_nodes > cfg.max_nodes {
        return Err(Error::InvalidConfig(format!(
            "invalid size range {}..={}",
            cfg.min_nodes, cfg.max_nodes
        )));
    }

    let mut shape_rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut label_rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    label_rng.set_stream(1);

    let mut seen = std::collections::HashSet::new();
    let mut graphs = Vec::with_capacity(cfg.count);
    let max_attempts = cfg.count.saturating_mul(1000).max(10_000);
    let mut attempts = 0;
    while graphs.len() < cfg.count {
        attempts += 1;
        if attempts > max_attempts {
            return Err(Error::SyntheticExhausted {
                requested: cfg.count,
                achieved: graphs.len(),
            });
        }
        let n = shape_rng.gen_range(cfg.min_nodes..=cfg.max_nodes);
        let edges = random_tree(&mut shape_rng, n);
        if !seen.insert(canonical_form(n, &edges)) {
            continue;
        }
        let nodes: Vec<Label> = (0..n)
            .map(|_| Label::symbol(label_rng.gen_range(1..=cfg.alphabet_size).to_string()))
            .collect();
        let labeled_edges = edges
            .iter()
            .map(|&(a, b)| (a, b, Label::symbol("1")))
            .collect();
        let id = format!("t{:04}", graphs.len() + 1);
        graphs.push(LabeledGraph::new(id, nodes, labeled_edges)?.with_class("mol"));
    }
    GraphCollection::new(LabelKind::Symbol, LabelKind::Symbol, graphs)
}

/// Uniform random labeled tree on `n` nodes via a random Pruefer sequence.
fn random_tree(rng: &mut impl Rng, n: usize) -> Vec<(usize, usize)> {
    match n {
        1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &p in &prufer {
        degree[p] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &p in &prufer {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, p));
        degree[p] -= 1;
        if degree[p] == 1 {
            leaves.push(std::cmp::Reverse(p));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

/// Canonical encoding of an unlabeled unrooted tree: root at the center (the
/// smaller encoding of the two when the center is an edge) and encode each
/// subtree as a sorted parenthesis string.
pub(crate) fn canonical_form(n: usize, edges: &[(usize, usize)]) -> String {
    if n == 0 {
        return String::new();
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let centers = tree_centers(n, &adj);
    centers
        .iter()
        .map(|&c| encode(c, usize::MAX, &adj))
        .min()
        .unwrap()
}

fn tree_centers(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

fn encode(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(w, v, adj))
        .collect();
    children.sort();
    format!("({})", children.concat())
}
