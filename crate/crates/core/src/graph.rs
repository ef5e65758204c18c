//! Immutable labelled simple graphs, subdivision graphs and SVN coronas.
//!
//! The SVN corona `G ⊡ H` is the subdivision graph `S(G)` together with one
//! copy of `H` per vertex `u_i` of `G`, where every vertex of the `i`-th copy
//! is joined to every inserted vertex adjacent to `u_i` in `S(G)`.
//!
//! Vertex ids of a corona are laid out as: all base vertices `u_i` (by `i`),
//! then the inserted vertices `s_{i,j}` (lexicographic in `(i, j)`, `i < j`),
//! then the copies `v_{i,k}` (lexicographic in `(i, k)`).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::{FamilyKind, FamilySpec};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("{kind} of size {size} is too small (minimum {min})")]
    SizeTooSmall { kind: FamilyKind, size: usize, min: usize },
    #[error("corona operand has no vertices")]
    EmptyOperand,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("label {0} does not exist in this graph")]
    UnknownLabel(VertexLabel),
    #[error("label table does not match the graph: {0}")]
    BadLabels(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Role of a vertex inside a subdivision graph or corona.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    /// `u_i`, a vertex of the left operand.
    Base(usize),
    /// `s_{i,j}`, inserted into the edge `u_i u_j`; always stored with `i < j`.
    Inserted(usize, usize),
    /// `v_{i,k}`, the copy of `v_k` in the copy of `H` attached to `u_i`.
    Copy(usize, usize),
}

impl VertexLabel {
    /// Canonical inserted label; accepts either endpoint order.
    pub fn inserted(i: usize, j: usize) -> Self {
        if i <= j {
            Self::Inserted(i, j)
        } else {
            Self::Inserted(j, i)
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Base(i) => write!(f, "u:{i}"),
            Self::Inserted(i, j) => write!(f, "s:{i}:{j}"),
            Self::Copy(i, k) => write!(f, "v:{i}:{k}"),
        }
    }
}

impl FromStr for VertexLabel {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::Parse(format!("bad vertex label `{s}`"));
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            ["u", i] => Ok(Self::Base(num(i)?)),
            ["s", i, j] => Ok(Self::inserted(num(i)?, num(j)?)),
            ["v", i, k] => Ok(Self::Copy(num(i)?, num(k)?)),
            _ => Err(bad()),
        }
    }
}

/// Where a graph came from, when it was built from the families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Family(FamilySpec),
    Subdivision(FamilySpec),
    Corona { left: FamilySpec, right: FamilySpec },
}

/// Immutable simple graph on vertex ids `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<VertexLabel>>,
    label_index: HashMap<VertexLabel, usize>,
    provenance: Option<Provenance>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); order];
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: v, order });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Ok(Self { adjacency, labels: None, label_index: HashMap::new(), provenance: None })
    }

    pub fn empty(order: usize) -> Self {
        Self { adjacency: vec![Vec::new(); order], labels: None, label_index: HashMap::new(), provenance: None }
    }

    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::BadLabels(format!("{} labels for {} vertices", labels.len(), self.order())));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (v, &label) in labels.iter().enumerate() {
            if index.insert(label, v).is_some() {
                return Err(GraphError::BadLabels(format!("duplicate label {label}")));
            }
        }
        self.labels = Some(labels);
        self.label_index = index;
        Ok(self)
    }

    pub(crate) fn set_provenance(&mut self, provenance: Option<Provenance>) {
        self.provenance = provenance;
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, nbrs)| nbrs.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect()
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<VertexLabel> {
        self.labels.as_ref().map(|l| l[v])
    }

    /// Vertex id carrying `label`. Inserted labels are accepted in either order.
    pub fn vertex(&self, label: VertexLabel) -> Option<usize> {
        let label = match label {
            VertexLabel::Inserted(i, j) => VertexLabel::inserted(i, j),
            other => other,
        };
        self.label_index.get(&label).copied()
    }

    pub fn provenance(&self) -> Option<Provenance> {
        self.provenance
    }

    /// Subgraph induced on `0..order`, keeping the labels of the kept vertices.
    pub fn prefix(&self, order: usize) -> Graph {
        let order = order.min(self.order());
        let adjacency: Vec<Vec<usize>> =
            self.adjacency[..order].iter().map(|nbrs| nbrs.iter().copied().filter(|&w| w < order).collect()).collect();
        let mut g = Graph { adjacency, labels: None, label_index: HashMap::new(), provenance: None };
        if let Some(labels) = &self.labels {
            g = g.with_labels(labels[..order].to_vec()).expect("prefix of valid labels");
        }
        g
    }
}

/// Subdivision graph: every edge `uv` becomes a path `u - s - v`.
///
/// Original vertices keep their ids and get `Base` labels; the inserted vertex
/// of the `e`-th edge (lexicographic order) gets id `order + e`.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.order();
    let edges = g.edges();
    let mut new_edges = Vec::with_capacity(2 * edges.len());
    let mut labels: Vec<VertexLabel> = (0..n).map(VertexLabel::Base).collect();
    for (e, &(a, b)) in edges.iter().enumerate() {
        let s = n + e;
        new_edges.push((a, s));
        new_edges.push((b, s));
        labels.push(VertexLabel::Inserted(a, b));
    }
    let mut out = Graph::from_edges(n + edges.len(), &new_edges)
        .expect("subdivision of a valid graph")
        .with_labels(labels)
        .expect("subdivision labels are unique");
    if let Some(Provenance::Family(spec)) = g.provenance() {
        out.set_provenance(Some(Provenance::Subdivision(spec)));
    }
    out
}

/// SVN corona `g ⊡ h`.
///
/// An edgeless `g` is accepted and yields `g` plus isolated copies of `h`.
pub fn svn_corona(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    if g.order() == 0 || h.order() == 0 {
        return Err(GraphError::EmptyOperand);
    }
    let n = g.order();
    let t = h.order();
    let g_edges = g.edges();
    let h_edges = h.edges();
    let e = g_edges.len();
    let copy = |i: usize, k: usize| n + e + i * t + k;

    let mut edges = Vec::with_capacity(2 * e + 2 * e * t + n * h_edges.len());
    let mut labels: Vec<VertexLabel> = (0..n).map(VertexLabel::Base).collect();
    for (idx, &(a, b)) in g_edges.iter().enumerate() {
        let s = n + idx;
        labels.push(VertexLabel::Inserted(a, b));
        edges.push((a, s));
        edges.push((b, s));
        for k in 0..t {
            edges.push((s, copy(a, k)));
            edges.push((s, copy(b, k)));
        }
    }
    for i in 0..n {
        for k in 0..t {
            labels.push(VertexLabel::Copy(i, k));
        }
        for &(x, y) in &h_edges {
            edges.push((copy(i, x), copy(i, y)));
        }
    }
    let mut out = Graph::from_edges(n + e + n * t, &edges)?.with_labels(labels)?;
    if let (Some(Provenance::Family(left)), Some(Provenance::Family(right))) = (g.provenance(), h.provenance()) {
        out.set_provenance(Some(Provenance::Corona { left, right }));
    }
    Ok(out)
}

/// Degree of `label` in `g ⊡ h`, computed from the operands alone.
pub fn corona_degree(g: &Graph, h: &Graph, label: VertexLabel) -> Result<usize, GraphError> {
    match label {
        VertexLabel::Base(i) if i < g.order() => Ok(g.degree(i)),
        VertexLabel::Inserted(i, j) if g.has_edge(i, j) => Ok(2 * h.order() + 2),
        VertexLabel::Copy(i, k) if i < g.order() && k < h.order() => Ok(g.degree(i) + h.degree(k)),
        other => Err(GraphError::UnknownLabel(other)),
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    order: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<usize, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<ProvenanceJson>,
}

#[derive(Serialize, Deserialize)]
struct ProvenanceJson {
    left: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    right: Option<String>,
}

const SUBDIVISION_TAG: &str = "subdivision";

impl Graph {
    pub fn to_json(&self) -> String {
        let labels = self
            .labels
            .as_ref()
            .map(|l| l.iter().enumerate().map(|(v, label)| (v, label.to_string())).collect())
            .unwrap_or_default();
        let provenance = self.provenance.map(|p| match p {
            Provenance::Family(spec) => ProvenanceJson { left: spec.to_string(), right: None },
            Provenance::Subdivision(spec) => {
                ProvenanceJson { left: spec.to_string(), right: Some(SUBDIVISION_TAG.to_string()) }
            }
            Provenance::Corona { left, right } => {
                ProvenanceJson { left: left.to_string(), right: Some(right.to_string()) }
            }
        });
        let doc = GraphJson {
            order: self.order(),
            edges: self.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            labels,
            provenance,
        };
        serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let doc: GraphJson = serde_json::from_str(text)?;
        let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[a, b]| (a, b)).collect();
        let mut g = Graph::from_edges(doc.order, &edges)?;
        if !doc.labels.is_empty() {
            if doc.labels.len() != doc.order || doc.labels.keys().copied().ne(0..doc.order) {
                return Err(GraphError::BadLabels("labels must cover every vertex id".into()));
            }
            let labels = doc.labels.values().map(|s| s.parse()).collect::<Result<Vec<_>, _>>()?;
            g = g.with_labels(labels)?;
        }
        if let Some(p) = doc.provenance {
            let left: FamilySpec = p.left.parse()?;
            let provenance = match p.right.as_deref() {
                None => Provenance::Family(left),
                Some(SUBDIVISION_TAG) => Provenance::Subdivision(left),
                Some(right) => Provenance::Corona { left, right: right.parse()? },
            };
            g.set_provenance(Some(provenance));
        }
        Ok(g)
    }
}
