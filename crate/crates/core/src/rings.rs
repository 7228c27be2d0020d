//! Rings: per-node decompositions of a graph into layers of equidistant
//! nodes with their inner and outer edges, built via breadth-first search.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// One layer of a ring: the nodes at a fixed distance from the root, the
/// edges inside the layer, and the edges leading to the next layer. Node and
/// edge lists are sorted, so downstream label extraction is deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Layer {
    pub nodes: Vec<usize>,
    pub outer_edges: Vec<(usize, usize)>,
    pub inner_edges: Vec<(usize, usize)>,
}

impl Layer {
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty() && self.outer_edges.is_empty() && self.inner_edges.is_empty()
    }
}

/// A ring of exactly `L` layers rooted at a node, or at the dummy node
/// (`root == None`), whose layers are all empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    pub root: Option<usize>,
    pub layers: Vec<Layer>,
}

impl Ring {
    pub fn size(&self) -> usize {
        self.layers.len()
    }

    /// Largest index of a non-empty layer, if any.
    pub fn max_nonempty_layer(&self) -> Option<usize> {
        (0..self.layers.len()).rev().find(|&l| !self.layers[l].is_empty())
    }
}

/// BFS distances from `root`; unreachable nodes stay `None`.
pub fn bfs_distances(g: &LabeledGraph, root: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.node_count()];
    dist[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &(w, _) in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Builds the ring of size `l_max` rooted at `root` (`None` for the dummy
/// node). Layer `l` holds the nodes at distance `l`, the edges between two
/// such nodes, and the edges to distance `l + 1`. Nodes at distance `l_max`
/// or beyond are excluded; the last layer still keeps its outer edges, whose
/// far endpoints the BFS never pushes, so a ring of size 1 is exactly the
/// branch structure (root plus incident edges). Runs in `O(|V| + |E|)`
/// regardless of `l_max`; nodes unreachable from the root never enter a
/// layer.
pub fn build_ring(g: &LabeledGraph, root: Option<usize>, l_max: usize) -> Result<Ring> {
    if l_max == 0 {
        return Err(Error::InvalidConfig("ring size must be at least 1".into()));
    }
    let Some(root) = root else {
        return Ok(empty_ring(l_max));
    };
    if root >= g.node_count() {
        return Err(Error::InvalidConfig(format!(
            "ring root {root} out of range for a graph with {} nodes",
            g.node_count()
        )));
    }

    let dist = bfs_distances(g, root);
    let mut layers = vec![Layer::default(); l_max];
    for (u, d) in dist.iter().enumerate() {
        if let Some(d) = *d {
            if d < l_max {
                layers[d].nodes.push(u);
            }
        }
    }
    for e in g.edges() {
        let (Some(da), Some(db)) = (dist[e.a], dist[e.b]) else {
            continue;
        };
        let (lo, hi) = if da <= db { (da, db) } else { (db, da) };
        if lo >= l_max {
            continue;
        }
        if lo == hi {
            layers[lo].inner_edges.push((e.a, e.b));
        } else {
            // BFS layers differ by at most one
            layers[lo].outer_edges.push((e.a, e.b));
        }
    }
    for layer in &mut layers {
        layer.nodes.sort_unstable();
        layer.inner_edges.sort_unstable();
        layer.outer_edges.sort_unstable();
    }
    Ok(Ring {
        root: Some(root),
        layers,
    })
}

/// The all-empty ring used for the dummy node.
pub fn empty_ring(l_max: usize) -> Ring {
    Ring {
        root: None,
        layers: vec![Layer::default(); l_max],
    }
}

/// Rings of size `l_max` for every node of a graph, plus the observed
/// diameter (the largest finite BFS distance seen from any root).
#[derive(Clone, Debug)]
pub struct RingSet {
    pub rings: Vec<Ring>,
    pub diameter: usize,
    empty: Ring,
}

impl RingSet {
    pub fn ring(&self, u: Option<usize>) -> &Ring {
        match u {
            Some(u) => &self.rings[u],
            None => &self.empty,
        }
    }

    pub fn size(&self) -> usize {
        self.empty.size()
    }
}

pub fn build_all_rings(g: &LabeledGraph, l_max: usize) -> Result<RingSet> {
    let mut rings = Vec::with_capacity(g.node_count());
    let mut diameter = 0;
    for u in 0..g.node_count() {
        let dist = bfs_distances(g, u);
        let ecc = dist.iter().flatten().copied().max().unwrap_or(0);
        diameter = diameter.max(ecc);
        rings.push(build_ring(g, Some(u), l_max)?);
    }
    Ok(RingSet {
        rings,
        diameter,
        empty: empty_ring(l_max),
    })
}
