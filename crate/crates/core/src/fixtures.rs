//! Small built-in example graphs used by the test suites and documentation.

use crate::graph::{collection_from_json, GraphCollection, Label, LabeledGraph};

/// Two distorted letter drawings with 2-d coordinate node labels and
/// unlabeled edges, in the JSON dataset format.
pub const LETTER_JSON: &str = r#"{
  "node_label_kind": "vector",
  "edge_label_kind": "symbol",
  "graphs": [
    {
      "id": "G",
      "class": "letter",
      "nodes": [[0.69, 0.27], [1.40, 1.85], [2.55, 0.45], [0.93, 1.37], [2.00, 1.38]],
      "edges": [[1, 2, "1"], [2, 3, "1"], [4, 5, "1"]]
    },
    {
      "id": "H",
      "class": "letter",
      "nodes": [[0.92, 0.32], [1.76, 1.81], [2.30, 0.21], [0.92, 0.85]],
      "edges": [[1, 2, "1"], [2, 3, "1"], [3, 4, "1"]]
    }
  ]
}"#;

/// The two letter graphs as a validated collection.
pub fn letter_collection() -> GraphCollection {
    collection_from_json(LETTER_JSON).expect("built-in fixture is valid")
}

/// The two letter graphs `(G, H)`.
pub fn letter_pair() -> (LabeledGraph, LabeledGraph) {
    let coll = letter_collection();
    let mut it = coll.graphs.into_iter();
    (it.next().unwrap(), it.next().unwrap())
}

/// An unlabeled graph (all node and edge labels equal) from an edge list.
pub fn unlabeled_graph(id: &str, n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
    LabeledGraph::new(
        id,
        vec![Label::symbol("1"); n],
        edges
            .iter()
            .map(|&(u, v)| (u, v, Label::symbol("1")))
            .collect(),
    )
    .expect("valid edge list")
}
