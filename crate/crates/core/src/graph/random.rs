//! Seedable random graph generators for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Graph, Vertex};

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::new(n, edges).expect("generated edges are simple")
}

/// Uniform random recursive tree: vertex `v > 0` hangs off a random earlier vertex.
pub fn tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (rng.random_range(0..v), v))).expect("tree edges are simple")
}

/// Random sides, then each cross pair becomes an edge with probability `p`.
pub fn bipartite<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| side[u] != side[v])
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::new(n, edges).expect("generated edges are simple")
}

/// `G(n, p)` with a triangle planted on three random vertices, so the
/// result always has an odd cycle. Needs `n >= 3`.
pub fn non_bipartite<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    assert!(n >= 3, "a triangle needs three vertices");
    let mut vertices: Vec<Vertex> = (0..n).collect();
    vertices.shuffle(rng);
    let (a, b, c) = (vertices[0], vertices[1], vertices[2]);
    let planted = [
        (a.min(b), a.max(b)),
        (a.min(c), a.max(c)),
        (b.min(c), b.max(c)),
    ];
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| planted.contains(e) || rng.random_bool(p))
        .collect();
    Graph::new(n, edges).expect("generated edges are simple")
}

/// A random subgraph `h` of `g` together with its embedding: a random
/// non-empty vertex subset in random order, keeping each edge of `g`
/// between chosen vertices with probability 1/2.
pub fn subgraph<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> (Graph, Vec<Vertex>) {
    assert!(
        g.vertex_count() > 0,
        "cannot take a subgraph of the empty graph"
    );
    let mut embed: Vec<Vertex> = g.vertices().collect();
    embed.shuffle(rng);
    embed.truncate(rng.random_range(1..=g.vertex_count()));
    let edges: Vec<_> = (0..embed.len())
        .flat_map(|i| (i + 1..embed.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| g.has_edge(embed[i], embed[j]))
        .filter(|_| rng.random_bool(0.5))
        .collect();
    (
        Graph::new(embed.len(), edges).expect("subgraph edges are simple"),
        embed,
    )
}
