//! Standard graph families.

use super::{Graph, Vertex};
use crate::error::GraphError;

/// `P_n`: vertices `0..n` joined in order.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadFamilyParameter {
            family: "path",
            requirement: "at least 1 vertex",
        });
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n`: the path `0..n` closed by the edge `(n-1, 0)`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadFamilyParameter {
            family: "cycle",
            requirement: "at least 3 vertices",
        });
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadFamilyParameter {
            family: "complete",
            requirement: "at least 1 vertex",
        });
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m == 0 || n == 0 {
        return Err(GraphError::BadFamilyParameter {
            family: "complete_bipartite",
            requirement: "both parts non-empty",
        });
    }
    Graph::new(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

/// Builds a forest from a parent array: `parents[v]` is `v`'s parent, or
/// `None` for a root.
pub fn tree_from_parent_array(parents: &[Option<Vertex>]) -> Result<Graph, GraphError> {
    let n = parents.len();
    for (v, p) in parents.iter().enumerate() {
        match *p {
            Some(p) if p >= n => {
                return Err(GraphError::MalformedParents(format!(
                    "parent {p} of vertex {v} is out of range"
                )))
            }
            Some(p) if p == v => {
                return Err(GraphError::MalformedParents(format!(
                    "vertex {v} is its own parent"
                )))
            }
            _ => {}
        }
    }
    // every vertex must reach a root; a walk longer than n is a cycle
    for start in 0..n {
        let mut v = start;
        let mut steps = 0;
        while let Some(p) = parents[v] {
            v = p;
            steps += 1;
            if steps > n {
                return Err(GraphError::MalformedParents(format!(
                    "vertex {start} lies on a parent cycle"
                )));
            }
        }
    }
    Graph::new(
        n,
        parents
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p, v))),
    )
}
