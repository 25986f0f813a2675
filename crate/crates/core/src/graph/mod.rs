//! Finite simple undirected graphs.
//!
//! Vertices are the integers `0..vertex_count`. Edges are stored once, as
//! `(u, v)` with `u < v`, in ascending order; that order is the canonical
//! edge order used by every report in the crate.

mod bipartite;
pub mod enumerate;
pub mod families;
mod io;
pub mod random;

pub use bipartite::{bipartition, two_coloring, Bipartition, OddCycle, Side};
pub use io::{parse_edge_list, write_edge_list};

use crate::error::GraphError;

pub type Vertex = usize;

/// An undirected edge with `.0 < .1`.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and out-of-range ids.
    /// Edge orientation and order in the input do not matter.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut canonical = Vec::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange(u, v, vertex_count));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &canonical {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            vertex_count,
            edges: canonical,
            adjacency,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count
            && v < self.vertex_count
            && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    pub fn is_bipartite(&self) -> bool {
        two_coloring(self).is_ok()
    }
}

/// True iff `embed` maps the vertices of `h` injectively into `g` and sends
/// every edge of `h` to an edge of `g`.
pub fn is_subgraph(h: &Graph, g: &Graph, embed: &[Vertex]) -> bool {
    if embed.len() != h.vertex_count() {
        return false;
    }
    let mut used = vec![false; g.vertex_count()];
    for &image in embed {
        if image >= g.vertex_count() || used[image] {
            return false;
        }
        used[image] = true;
    }
    h.edges()
        .iter()
        .all(|&(u, v)| g.has_edge(embed[u], embed[v]))
}
