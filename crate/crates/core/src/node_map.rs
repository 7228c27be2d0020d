//! Node maps between two graphs and the edit cost they induce.

use crate::costs::CostModel;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::lsape::Assignment;

/// A node map is an error-correcting correspondence between `V^G` and `V^H`:
/// the same object as an LSAPE solution, with rows read as nodes of `G`,
/// columns as nodes of `H`, and the dummy side as deletion/insertion.
pub type NodeMap = Assignment;

/// Cost of the edit path induced by `map`: node substitutions, deletions and
/// insertions, then one pass over `E^G` (substituted when the image pair is
/// an edge of `H`, deleted otherwise) and one pass over `E^H` for insertions.
pub fn induced_edit_cost(
    g: &LabeledGraph,
    h: &LabeledGraph,
    map: &NodeMap,
    costs: &dyn CostModel,
) -> Result<f64> {
    map.validate(g.node_count(), h.node_count())
        .map_err(|e| Error::InfeasibleAssignment(format!("node map invalid: {e}")))?;

    let mut total = 0.0;
    for u in 0..g.node_count() {
        total += match map.image(u) {
            Some(v) => costs.node_sub(g.node_label(u), h.node_label(v)),
            None => costs.node_del(g.node_label(u)),
        };
    }
    for v in 0..h.node_count() {
        if map.preimage(v).is_none() {
            total += costs.node_ins(h.node_label(v));
        }
    }

    for e in g.edges() {
        total += match (map.image(e.a), map.image(e.b)) {
            (Some(x), Some(y)) => match h.edge_label(x, y) {
                Some(label) => costs.edge_sub(&e.label, label),
                None => costs.edge_del(&e.label),
            },
            _ => costs.edge_del(&e.label),
        };
    }
    for f in h.edges() {
        let substituted = match (map.preimage(f.a), map.preimage(f.b)) {
            (Some(x), Some(y)) => g.has_edge(x, y),
            _ => false,
        };
        if !substituted {
            total += costs.edge_ins(&f.label);
        }
    }
    Ok(total)
}

/// Minimum induced edit cost over a non-empty list of solutions, together
/// with an argmin map. This is the multi-solution tightening step: more
/// optimal LSAPE solutions can only lower the returned bound.
pub fn upper_bound_from_solutions(
    g: &LabeledGraph,
    h: &LabeledGraph,
    solutions: &[Assignment],
    costs: &dyn CostModel,
) -> Result<(f64, NodeMap)> {
    if solutions.is_empty() {
        return Err(Error::EmptyInput("solution list"));
    }
    let mut best: Option<(f64, &Assignment)> = None;
    for sol in solutions {
        let cost = induced_edit_cost(g, h, sol, costs)?;
        if best.map_or(true, |(b, _)| cost < b) {
            best = Some((cost, sol));
        }
    }
    let (cost, map) = best.expect("non-empty list");
    Ok((cost, map.clone()))
}
