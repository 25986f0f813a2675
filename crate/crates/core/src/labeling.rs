//! Vertex labelings, induced edge labels, and the IASI predicates.
//!
//! A labeling assigns an [`IntSet`] to every vertex; each edge `uv` then
//! carries the sumset `f(u) + f(v)`. [`verify`] evaluates injectivity,
//! uniformity, weakness and weak uniformity in a single pass.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{LabelingError, ParseError};
use crate::graph::{is_subgraph, Edge, Graph, Vertex};
use crate::intset::{sumset, IntSet};

/// Upper bound on the number of collisions listed in a report.
pub const MAX_WITNESSES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Labeling {
    labels: Vec<IntSet>,
}

impl Labeling {
    pub fn new(labels: Vec<IntSet>) -> Self {
        Self { labels }
    }

    pub fn label(&self, v: Vertex) -> &IntSet {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[IntSet] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn check_fits(&self, g: &Graph) -> Result<(), LabelingError> {
        if self.labels.len() == g.vertex_count() {
            Ok(())
        } else {
            Err(LabelingError::SizeMismatch {
                labels: self.labels.len(),
                vertices: g.vertex_count(),
            })
        }
    }

    /// Parses `v: {a,b,c}` lines. Ids must run `0, 1, 2, ...` in order;
    /// blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut labels = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (id, set) = line.split_once(':').ok_or_else(|| {
                ParseError::new(line_no, format!("expected `v: {{...}}`, found `{line}`"))
            })?;
            let id: usize = id
                .trim()
                .parse()
                .map_err(|_| ParseError::new(line_no, format!("bad vertex id `{}`", id.trim())))?;
            if id != labels.len() {
                return Err(ParseError::new(
                    line_no,
                    format!("expected vertex {}, found {id}", labels.len()),
                ));
            }
            let set: IntSet = set
                .parse()
                .map_err(|e| ParseError::new(line_no, format!("{e}")))?;
            labels.push(set);
        }
        Ok(Self { labels })
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, set) in self.labels.iter().enumerate() {
            writeln!(f, "{v}: {set}")?;
        }
        Ok(())
    }
}

/// `f(u) + f(v)` for an edge `uv` of `g`.
pub fn induced_edge_label(
    g: &Graph,
    labeling: &Labeling,
    u: Vertex,
    v: Vertex,
) -> Result<IntSet, LabelingError> {
    labeling.check_fits(g)?;
    if !g.has_edge(u, v) {
        return Err(LabelingError::NotAnEdge(u, v));
    }
    Ok(sumset(labeling.label(u), labeling.label(v)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub label: IntSet,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    VertexCollision {
        u: Vertex,
        v: Vertex,
        label: IntSet,
    },
    EdgeCollision {
        first: Edge,
        second: Edge,
        label: IntSet,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::VertexCollision { u, v, label } => {
                write!(f, "vertices {u} and {v} share label {label}")
            }
            Witness::EdgeCollision {
                first: (a, b),
                second: (c, d),
                label,
            } => write!(f, "edges {a}-{b} and {c}-{d} share label {label}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub vertex_injective: bool,
    pub edge_injective: bool,
    pub is_iasi: bool,
    /// Common edge set-indexing number; `None` when edge sizes differ, the
    /// labeling is not an IASI, or there are no edges.
    pub uniform_k: Option<usize>,
    pub is_weak: bool,
    pub weakly_uniform_k: Option<usize>,
    pub vertex_sizes: Vec<usize>,
    /// One entry per edge, canonical order.
    pub edges: Vec<InducedEdge>,
    pub witnesses: Vec<Witness>,
    pub witnesses_truncated: bool,
}

impl VerificationReport {
    pub fn edge_sizes(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.edges.iter().map(|e| ((e.u, e.v), e.size))
    }

    /// IASI whose every edge has exactly `k` elements; vacuous on edgeless graphs.
    pub fn is_uniform(&self, k: usize) -> bool {
        self.is_iasi && self.edges.iter().all(|e| e.size == k)
    }

    /// `k`-uniform IASI whose vertex labels all have 1 or `k` elements.
    pub fn is_weakly_uniform(&self, k: usize) -> bool {
        self.is_uniform(k) && self.vertex_sizes.iter().all(|&s| s == 1 || s == k)
    }
}

/// Evaluates every IASI predicate for `labeling` on `g`.
///
/// # Panics
/// If the labeling does not cover exactly the vertices of `g`.
pub fn verify(g: &Graph, labeling: &Labeling) -> VerificationReport {
    labeling
        .check_fits(g)
        .expect("labeling must cover the graph's vertices");

    let mut witnesses = Vec::new();
    let mut truncated = false;
    let mut record = |w: Witness| {
        if witnesses.len() < MAX_WITNESSES {
            witnesses.push(w);
        } else {
            truncated = true;
        }
    };

    let mut vertex_injective = true;
    let mut by_label: HashMap<&IntSet, Vec<Vertex>> = HashMap::new();
    for v in g.vertices() {
        let label = labeling.label(v);
        let holders = by_label.entry(label).or_default();
        for &u in holders.iter() {
            vertex_injective = false;
            record(Witness::VertexCollision {
                u,
                v,
                label: label.clone(),
            });
        }
        holders.push(v);
    }

    let edges: Vec<InducedEdge> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let label = sumset(labeling.label(u), labeling.label(v));
            InducedEdge {
                u,
                v,
                size: label.len(),
                label,
            }
        })
        .collect();

    let mut edge_injective = true;
    let mut by_edge_label: HashMap<&IntSet, Vec<Edge>> = HashMap::new();
    for e in &edges {
        let holders = by_edge_label.entry(&e.label).or_default();
        for &first in holders.iter() {
            edge_injective = false;
            record(Witness::EdgeCollision {
                first,
                second: (e.u, e.v),
                label: e.label.clone(),
            });
        }
        holders.push((e.u, e.v));
    }

    let vertex_sizes: Vec<usize> = labeling.labels().iter().map(IntSet::len).collect();
    let is_iasi = vertex_injective && edge_injective;
    let uniform_k = match edges.first() {
        Some(first) if is_iasi && edges.iter().all(|e| e.size == first.size) => Some(first.size),
        _ => None,
    };
    let is_weak = is_iasi
        && edges
            .iter()
            .all(|e| e.size == vertex_sizes[e.u].max(vertex_sizes[e.v]));
    let weakly_uniform_k = uniform_k.filter(|&k| vertex_sizes.iter().all(|&s| s == 1 || s == k));

    VerificationReport {
        vertex_injective,
        edge_injective,
        is_iasi,
        uniform_k,
        is_weak,
        weakly_uniform_k,
        vertex_sizes,
        edges,
        witnesses,
        witnesses_truncated: truncated,
    }
}

/// The labeling that `h` inherits through `embed`: vertex `v` of `h` gets
/// the parent label of `embed[v]`.
pub fn restrict(
    parent: &Graph,
    labeling: &Labeling,
    h: &Graph,
    embed: &[Vertex],
) -> Result<Labeling, LabelingError> {
    labeling.check_fits(parent)?;
    if !is_subgraph(h, parent, embed) {
        return Err(LabelingError::InvalidEmbedding(format!(
            "{embed:?} does not embed the {}-vertex graph",
            h.vertex_count()
        )));
    }
    Ok(Labeling::new(
        embed
            .iter()
            .map(|&image| labeling.label(image).clone())
            .collect(),
    ))
}
