//! Labeled graphs, graph collections, and the JSON dataset format.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A node or edge label: either a symbol or a fixed-dimension real vector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Symbol(String),
    Vector(Vec<f64>),
}

impl Label {
    pub fn symbol(s: impl Into<String>) -> Self {
        Label::Symbol(s.into())
    }

    pub fn vector(v: impl Into<Vec<f64>>) -> Self {
        Label::Vector(v.into())
    }

    pub fn kind(&self) -> LabelKind {
        match self {
            Label::Symbol(_) => LabelKind::Symbol,
            Label::Vector(_) => LabelKind::Vector,
        }
    }

    pub fn as_vector(&self) -> Option<&[f64]> {
        match self {
            Label::Vector(v) => Some(v),
            Label::Symbol(_) => None,
        }
    }

    /// Hashable identity key. Vector labels compare by exact bit pattern.
    pub(crate) fn key(&self) -> LabelKey {
        match self {
            Label::Symbol(s) => LabelKey::Symbol(s.clone()),
            Label::Vector(v) => LabelKey::Bits(v.iter().map(|x| x.to_bits()).collect()),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Symbol(s) => write!(f, "{s}"),
            Label::Vector(v) => {
                write!(f, "(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Clone, Debug, Hash, PartialEq, Eq)]
pub(crate) enum LabelKey {
    Symbol(String),
    Bits(Vec<u64>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Symbol,
    Vector,
}

/// An undirected labeled edge with normalized endpoints `a < b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub label: Label,
}

impl Edge {
    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }
}

/// An undirected graph with labeled nodes and edges. Node indices are dense
/// `0..node_count()`; edges are stored sorted by normalized endpoint pair, so
/// iteration order is deterministic.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub id: String,
    pub class_label: Option<String>,
    nodes: Vec<Label>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, usize)>>, // node -> (neighbor, edge index)
    edge_lookup: HashMap<(usize, usize), usize>,
}

impl LabeledGraph {
    /// Builds a graph from 0-based endpoints, rejecting self-loops, duplicate
    /// edges, and out-of-range indices.
    pub fn new(
        id: impl Into<String>,
        nodes: Vec<Label>,
        edges: Vec<(usize, usize, Label)>,
    ) -> Result<Self> {
        let id = id.into();
        let n = nodes.len();
        let mut normalized: Vec<Edge> = Vec::with_capacity(edges.len());
        for (u, v, label) in edges {
            if u == v {
                return Err(Error::Dataset {
                    graph: id,
                    message: format!("self-loop at node {}", u + 1),
                });
            }
            if u >= n || v >= n {
                return Err(Error::Dataset {
                    graph: id,
                    message: format!(
                        "edge ({},{}) references a node outside 1..={n}",
                        u + 1,
                        v + 1
                    ),
                });
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            normalized.push(Edge { a, b, label });
        }
        normalized.sort_by_key(|e| (e.a, e.b));
        for w in normalized.windows(2) {
            if w[0].a == w[1].a && w[0].b == w[1].b {
                return Err(Error::Dataset {
                    graph: id,
                    message: format!("duplicate edge ({},{})", w[0].a + 1, w[0].b + 1),
                });
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_lookup = HashMap::with_capacity(normalized.len());
        for (idx, e) in normalized.iter().enumerate() {
            adjacency[e.a].push((e.b, idx));
            adjacency[e.b].push((e.a, idx));
            edge_lookup.insert((e.a, e.b), idx);
        }
        Ok(Self {
            id,
            class_label: None,
            nodes,
            edges: normalized,
            adjacency,
            edge_lookup,
        })
    }

    pub fn with_class(mut self, class: impl Into<String>) -> Self {
        self.class_label = Some(class.into());
        self
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn node_label(&self, u: usize) -> &Label {
        &self.nodes[u]
    }

    pub fn node_labels(&self) -> &[Label] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edge_lookup.contains_key(&key)
    }

    /// Label of the edge `{u, v}`, if present.
    pub fn edge_label(&self, u: usize, v: usize) -> Option<&Label> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edge_lookup.get(&key).map(|&i| &self.edges[i].label)
    }

    /// Neighbors of `u` together with the connecting edge index.
    pub fn neighbors(&self, u: usize) -> &[(usize, usize)] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    /// Normalized endpoint pairs of the edges incident to `u`.
    pub fn incident_edges(&self, u: usize) -> Vec<(usize, usize)> {
        self.adjacency[u]
            .iter()
            .map(|&(_, idx)| (self.edges[idx].a, self.edges[idx].b))
            .collect()
    }
}

/// A set of graphs sharing one node-label kind and one edge-label kind.
#[derive(Clone, Debug)]
pub struct GraphCollection {
    pub node_label_kind: LabelKind,
    pub edge_label_kind: LabelKind,
    pub graphs: Vec<LabeledGraph>,
}

impl GraphCollection {
    pub fn new(
        node_label_kind: LabelKind,
        edge_label_kind: LabelKind,
        graphs: Vec<LabeledGraph>,
    ) -> Result<Self> {
        let coll = Self {
            node_label_kind,
            edge_label_kind,
            graphs,
        };
        coll.validate()?;
        Ok(coll)
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    fn validate(&self) -> Result<()> {
        let mut node_dim: Option<usize> = None;
        let mut edge_dim: Option<usize> = None;
        for g in &self.graphs {
            for (u, label) in g.node_labels().iter().enumerate() {
                check_label(
                    &g.id,
                    label,
                    self.node_label_kind,
                    &mut node_dim,
                    || format!("node {}", u + 1),
                )?;
            }
            for e in g.edges() {
                check_label(&g.id, &e.label, self.edge_label_kind, &mut edge_dim, || {
                    format!("edge ({},{})", e.a + 1, e.b + 1)
                })?;
            }
        }
        Ok(())
    }
}

fn check_label(
    graph: &str,
    label: &Label,
    expected: LabelKind,
    dim: &mut Option<usize>,
    location: impl Fn() -> String,
) -> Result<()> {
    if label.kind() != expected {
        return Err(Error::Dataset {
            graph: graph.to_string(),
            message: format!(
                "{} has a {:?} label but the collection declares {:?}",
                location(),
                label.kind(),
                expected
            ),
        });
    }
    if let Label::Vector(v) = label {
        match *dim {
            None => *dim = Some(v.len()),
            Some(d) if d != v.len() => {
                return Err(Error::Dataset {
                    graph: graph.to_string(),
                    message: format!(
                        "{} has a vector label of dimension {} (collection uses {})",
                        location(),
                        v.len(),
                        d
                    ),
                });
            }
            _ => {}
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct DatasetFile {
    node_label_kind: LabelKind,
    edge_label_kind: LabelKind,
    graphs: Vec<GraphFile>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    class: Option<String>,
    nodes: Vec<Label>,
    edges: Vec<(usize, usize, Label)>,
}

/// Loads and validates a collection from the JSON dataset format. Node
/// indices in the file are 1-based.
pub fn load_collection(path: impl AsRef<Path>) -> Result<GraphCollection> {
    let text = std::fs::read_to_string(path)?;
    collection_from_json(&text)
}

pub fn collection_from_json(text: &str) -> Result<GraphCollection> {
    let file: DatasetFile = serde_json::from_str(text)?;
    let mut graphs = Vec::with_capacity(file.graphs.len());
    for gf in file.graphs {
        let edges = gf
            .edges
            .into_iter()
            .map(|(u, v, label)| {
                if u == 0 || v == 0 {
                    return Err(Error::Dataset {
                        graph: gf.id.clone(),
                        message: format!("edge ({u},{v}) uses 0; node indices are 1-based"),
                    });
                }
                Ok((u - 1, v - 1, label))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut g = LabeledGraph::new(gf.id, gf.nodes, edges)?;
        g.class_label = gf.class;
        graphs.push(g);
    }
    GraphCollection::new(file.node_label_kind, file.edge_label_kind, graphs)
}

/// Serializes a collection back to the 1-based JSON dataset format.
pub fn collection_to_json(coll: &GraphCollection) -> Result<String> {
    let file = DatasetFile {
        node_label_kind: coll.node_label_kind,
        edge_label_kind: coll.edge_label_kind,
        graphs: coll
            .graphs
            .iter()
            .map(|g| GraphFile {
                id: g.id.clone(),
                class: g.class_label.clone(),
                nodes: g.node_labels().to_vec(),
                edges: g
                    .edges()
                    .iter()
                    .map(|e| (e.a + 1, e.b + 1, e.label.clone()))
                    .collect(),
            })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

pub fn save_collection(coll: &GraphCollection, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, collection_to_json(coll)?)?;
    Ok(())
}
