use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use super::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Self {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A 2-coloring of the vertices with no monochromatic edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    side_of: Vec<Side>,
}

impl Bipartition {
    /// Wraps an explicit side assignment, checking it against `g`.
    pub fn from_sides(g: &Graph, side_of: Vec<Side>) -> Option<Self> {
        let candidate = Self { side_of };
        candidate.is_valid_for(g).then_some(candidate)
    }

    pub fn side(&self, v: Vertex) -> Side {
        self.side_of[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side_of
    }

    pub fn left(&self) -> Vec<Vertex> {
        self.members(Side::Left)
    }

    pub fn right(&self) -> Vec<Vertex> {
        self.members(Side::Right)
    }

    fn members(&self, side: Side) -> Vec<Vertex> {
        (0..self.side_of.len())
            .filter(|&v| self.side_of[v] == side)
            .collect()
    }

    /// Covers every vertex of `g` and separates every edge.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side_of.len() == g.vertex_count()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.side_of[u] != self.side_of[v])
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |vs: Vec<Vertex>| {
            vs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "left [{}] right [{}]",
            render(self.left()),
            render(self.right())
        )
    }
}

/// Vertices of an odd cycle, in traversal order; the closing edge runs
/// from the last vertex back to the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct OddCycle(pub Vec<Vertex>);

impl OddCycle {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let cycle = &self.0;
        let mut seen = vec![false; g.vertex_count()];
        cycle.len() % 2 == 1
            && cycle.len() >= 3
            && cycle
                .iter()
                .all(|&v| v < g.vertex_count() && !std::mem::replace(&mut seen[v], true))
            && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
    }
}

impl fmt::Display for OddCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// Breadth-first 2-coloring, one component at a time in order of lowest
/// vertex id; each component's lowest vertex goes left. On failure the
/// returned odd cycle closes through the first conflicting edge found.
pub fn two_coloring(g: &Graph) -> Result<Bipartition, OddCycle> {
    let n = g.vertex_count();
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut parent: Vec<Option<Vertex>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();

    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(Side::Left);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued vertices are colored");
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(su.opposite());
                        parent[w] = Some(u);
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => {
                        return Err(close_cycle(u, w, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Bipartition {
        side_of: side.into_iter().map(|s| s.expect("all colored")).collect(),
    })
}

/// `Some` iff `g` has no odd cycle.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    two_coloring(g).ok()
}

// u and w share a color, so their tree paths to the common ancestor have
// equal parity and the closed walk through edge u-w is an odd cycle.
fn close_cycle(u: Vertex, w: Vertex, parent: &[Option<Vertex>], depth: &[usize]) -> OddCycle {
    let (mut a, mut b) = (u, w);
    let mut up_from_u = vec![a];
    let mut up_from_w = vec![b];
    while depth[a] > depth[b] {
        a = parent[a].unwrap();
        up_from_u.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b].unwrap();
        up_from_w.push(b);
    }
    while a != b {
        a = parent[a].unwrap();
        b = parent[b].unwrap();
        up_from_u.push(a);
        up_from_w.push(b);
    }
    // both chains end at the common ancestor; keep it once
    up_from_w.pop();
    up_from_u.reverse();
    up_from_u.extend(up_from_w);
    OddCycle(up_from_u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, complete_bipartite, cycle, path};

    #[test]
    fn even_cycle_sides() {
        let b = bipartition(&cycle(4).unwrap()).unwrap();
        assert_eq!(b.left(), vec![0, 2]);
        assert_eq!(b.right(), vec![1, 3]);
    }

    #[test]
    fn triangle_certificate() {
        let c3 = cycle(3).unwrap();
        assert_eq!(bipartition(&c3), None);
        assert_eq!(two_coloring(&c3), Err(OddCycle(vec![0, 1, 2])));
    }

    #[test]
    fn edgeless_all_left() {
        let b = bipartition(&Graph::empty(3)).unwrap();
        assert_eq!(b.sides(), &[Side::Left; 3]);
    }

    #[test]
    fn odd_cycle_certificates_are_real_cycles() {
        for n in [3, 5, 7, 9] {
            let g = cycle(n).unwrap();
            let cyc = two_coloring(&g).unwrap_err();
            assert!(cyc.is_valid_for(&g), "{cyc} in C{n}");
            assert_eq!(cyc.vertices().len(), n);
        }
        let k5 = complete(5).unwrap();
        assert!(two_coloring(&k5).unwrap_err().is_valid_for(&k5));
        // triangle hanging off a long path
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)]).unwrap();
        let cyc = two_coloring(&g).unwrap_err();
        assert!(cyc.is_valid_for(&g));
        assert_eq!(cyc.vertices().len(), 3);
    }

    #[test]
    fn later_components_start_left() {
        let g = Graph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let b = bipartition(&g).unwrap();
        assert_eq!(b.left(), vec![0, 2, 4]);
        assert!(b.is_valid_for(&g));
        assert!(bipartition(&complete_bipartite(2, 3).unwrap()).is_some());
        assert!(bipartition(&path(6).unwrap()).is_some());
    }
}
