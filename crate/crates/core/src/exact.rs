//! Exact graph edit distance on small graphs by exhaustive enumeration of
//! node maps. Ground truth for every bound-validity and training test.

use crate::costs::CostModel;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::lsape::Assignment;
use crate::node_map::{induced_edit_cost, NodeMap};

/// Default limit on `|V^G| + |V^H|` for the exhaustive search.
pub const DEFAULT_SIZE_CAP: usize = 12;

pub fn exact_ged(
    g: &LabeledGraph,
    h: &LabeledGraph,
    costs: &dyn CostModel,
) -> Result<(f64, NodeMap)> {
    exact_ged_with_cap(g, h, costs, DEFAULT_SIZE_CAP)
}

/// Minimum induced edit cost over all node maps, found by depth-first
/// extension of injective partial maps with deletions and insertions. Partial
/// costs are exact for all decided operations, so the running total plus a
/// per-row node lower bound prunes against the incumbent.
pub fn exact_ged_with_cap(
    g: &LabeledGraph,
    h: &LabeledGraph,
    costs: &dyn CostModel,
    cap: usize,
) -> Result<(f64, NodeMap)> {
    let n = g.node_count();
    let m = h.node_count();
    if n + m > cap {
        return Err(Error::TooLarge(format!(
            "|V^G| + |V^H| = {} exceeds the exhaustive-search cap {cap}",
            n + m
        )));
    }

    // cheapest conceivable node operation per row of G
    let mut node_lb = vec![0.0f64; n];
    for u in 0..n {
        let mut lb = costs.node_del(g.node_label(u));
        for v in 0..m {
            lb = lb.min(costs.node_sub(g.node_label(u), h.node_label(v)));
        }
        node_lb[u] = lb;
    }
    let mut suffix_lb = vec![0.0f64; n + 1];
    for u in (0..n).rev() {
        suffix_lb[u] = suffix_lb[u + 1] + node_lb[u];
    }
    let min_ins = (0..m)
        .map(|v| costs.node_ins(h.node_label(v)))
        .fold(f64::INFINITY, f64::min);

    // seed the incumbent with two trivial complete maps
    let mut best_map = seed_map(n, m, 0);
    let mut best = induced_edit_cost(g, h, &best_map, costs)?;
    let all_eps = seed_map(n, m, usize::MAX);
    let all_eps_cost = induced_edit_cost(g, h, &all_eps, costs)?;
    if all_eps_cost < best {
        best = all_eps_cost;
        best_map = all_eps;
    }

    let mut search = Search {
        g,
        h,
        costs,
        suffix_lb: &suffix_lb,
        min_ins,
        image: vec![None; n],
        preimage: vec![None; m],
        best,
        best_map: best_map.row_map().to_vec(),
    };
    search.descend(0, 0.0);

    let map = Assignment::from_row_map(search.best_map, m)?;
    let cost = search.best;
    Ok((cost, map))
}

fn seed_map(n: usize, m: usize, shift: usize) -> NodeMap {
    let row_to_col = (0..n)
        .map(|i| {
            let v = i.wrapping_add(shift);
            (v < m).then_some(v)
        })
        .collect();
    Assignment::from_row_map(row_to_col, m).expect("seed map is injective")
}

struct Search<'a> {
    g: &'a LabeledGraph,
    h: &'a LabeledGraph,
    costs: &'a dyn CostModel,
    suffix_lb: &'a [f64],
    min_ins: f64,
    image: Vec<Option<usize>>,
    preimage: Vec<Option<usize>>,
    best: f64,
    best_map: Vec<Option<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, u: usize, acc: f64) {
        let n = self.g.node_count();
        let m = self.h.node_count();
        let matched = self.preimage.iter().filter(|p| p.is_some()).count();
        let deficit = (m - matched).saturating_sub(n - u);
        let lb = acc + self.suffix_lb[u] + deficit as f64 * self.min_ins;
        if lb >= self.best {
            return;
        }
        if u == n {
            let total = acc + self.leaf_insertions();
            if total < self.best {
                self.best = total;
                self.best_map = self.image.clone();
            }
            return;
        }

        for v in 0..m {
            if self.preimage[v].is_some() {
                continue;
            }
            let step = self.extension_cost(u, Some(v));
            self.image[u] = Some(v);
            self.preimage[v] = Some(u);
            self.descend(u + 1, acc + step);
            self.image[u] = None;
            self.preimage[v] = None;
        }
        let step = self.extension_cost(u, None);
        self.descend(u + 1, acc + step);
    }

    /// Exact cost of all edit operations decided by assigning `u`.
    fn extension_cost(&self, u: usize, target: Option<usize>) -> f64 {
        let mut cost = match target {
            Some(v) => self
                .costs
                .node_sub(self.g.node_label(u), self.h.node_label(v)),
            None => self.costs.node_del(self.g.node_label(u)),
        };
        for &(w, eidx) in self.g.neighbors(u) {
            if w > u {
                continue; // decided when w is assigned
            }
            let label = &self.g.edges()[eidx].label;
            cost += match (target, self.image[w]) {
                (Some(v), Some(x)) => match self.h.edge_label(v, x) {
                    Some(other) => self.costs.edge_sub(label, other),
                    None => self.costs.edge_del(label),
                },
                _ => self.costs.edge_del(label),
            };
        }
        if let Some(v) = target {
            for &(x, fidx) in self.h.neighbors(v) {
                if let Some(w) = self.preimage[x] {
                    if !self.g.has_edge(u, w) {
                        cost += self.costs.edge_ins(&self.h.edges()[fidx].label);
                    }
                }
            }
        }
        cost
    }

    fn leaf_insertions(&self) -> f64 {
        let mut cost = 0.0;
        for v in 0..self.h.node_count() {
            if self.preimage[v].is_none() {
                cost += self.costs.node_ins(self.h.node_label(v));
            }
        }
        for f in self.h.edges() {
            if self.preimage[f.a].is_none() || self.preimage[f.b].is_none() {
                cost += self.costs.edge_ins(&f.label);
            }
        }
        cost
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::costs::ConstantCosts;
    use crate::fixtures::unlabeled_graph;
    use crate::graph::Label;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_on_identical_graphs() {
        let g = unlabeled_graph("g", 4, &[(0, 1), (1, 2), (2, 3)]);
        let (cost, map) = exact_ged(&g, &g, &ConstantCosts::uniform()).unwrap();
        assert_eq!(cost, 0.0);
        assert_eq!(
            induced_edit_cost(&g, &g, &map, &ConstantCosts::uniform()).unwrap(),
            0.0
        );
    }

    #[test]
    fn substitution_beats_delete_plus_insert() {
        let g = LabeledGraph::new("g", vec![Label::symbol("a")], vec![]).unwrap();
        let h = LabeledGraph::new("h", vec![Label::symbol("b")], vec![]).unwrap();
        let (cost, _) = exact_ged(&g, &h, &ConstantCosts::uniform()).unwrap();
        assert_eq!(cost, 1.0);
    }

    #[test]
    fn triangle_to_path_deletes_one_edge() {
        let g = unlabeled_graph("tri", 3, &[(0, 1), (1, 2), (0, 2)]);
        let h = unlabeled_graph("path", 3, &[(0, 1), (1, 2)]);
        let (cost, _) = exact_ged(&g, &h, &ConstantCosts::uniform()).unwrap();
        assert_eq!(cost, 1.0);
    }

    #[test]
    fn size_cap_is_enforced() {
        let g = unlabeled_graph("g", 7, &[]);
        let h = unlabeled_graph("h", 6, &[]);
        assert!(matches!(
            exact_ged(&g, &h, &ConstantCosts::uniform()),
            Err(Error::TooLarge(_))
        ));
        assert!(exact_ged_with_cap(&g, &h, &ConstantCosts::uniform(), 13).is_ok());
    }

    fn random_graph(rng: &mut impl Rng, n: usize) -> LabeledGraph {
        let nodes = (0..n)
            .map(|_| Label::symbol(format!("{}", rng.gen_range(0..2))))
            .collect();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((a, b, Label::symbol("1")));
                }
            }
        }
        LabeledGraph::new("r", nodes, edges).unwrap()
    }

    #[test]
    fn symmetric_costs_give_symmetric_ged() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let costs = ConstantCosts::new(0.5, 1.0, 1.0, 0.25, 0.75, 0.75).unwrap();
        for _ in 0..20 {
            let (n, m) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
            let g = random_graph(&mut rng, n);
            let h = random_graph(&mut rng, m);
            let (gh, _) = exact_ged(&g, &h, &costs).unwrap();
            let (hg, _) = exact_ged(&h, &g, &costs).unwrap();
            assert!((gh - hg).abs() < 1e-12);
        }
    }

    /// Pruned search agrees with a plain exhaustive scan over all maps.
    #[test]
    fn matches_unpruned_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let costs = ConstantCosts::new(0.8, 1.2, 0.9, 0.6, 0.5, 1.1).unwrap();
        for _ in 0..15 {
            let (n, m) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
            let g = random_graph(&mut rng, n);
            let h = random_graph(&mut rng, m);
            let (fast, map) = exact_ged(&g, &h, &costs).unwrap();
            assert!((induced_edit_cost(&g, &h, &map, &costs).unwrap() - fast).abs() < 1e-12);

            let mut brute = f64::INFINITY;
            enumerate_maps(
                g.node_count(),
                h.node_count(),
                &mut vec![None; g.node_count()],
                &mut vec![false; h.node_count()],
                0,
                &mut |rows| {
                    let a = Assignment::from_row_map(rows.to_vec(), h.node_count()).unwrap();
                    let c = induced_edit_cost(&g, &h, &a, &costs).unwrap();
                    if c < brute {
                        brute = c;
                    }
                },
            );
            assert!((fast - brute).abs() < 1e-12, "fast {fast} brute {brute}");
        }
    }

    fn enumerate_maps(
        n: usize,
        m: usize,
        rows: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        u: usize,
        visit: &mut impl FnMut(&[Option<usize>]),
    ) {
        if u == n {
            visit(rows);
            return;
        }
        for v in 0..m {
            if !used[v] {
                used[v] = true;
                rows[u] = Some(v);
                enumerate_maps(n, m, rows, used, u + 1, visit);
                rows[u] = None;
                used[v] = false;
            }
        }
        enumerate_maps(n, m, rows, used, u + 1, visit);
    }
}
