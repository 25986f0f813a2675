//! Exhaustive enumeration of small graphs up to isomorphism.

use itertools::Itertools;

use super::Graph;

/// Largest vertex count accepted by [`connected_graphs`]; beyond this the
/// orbit table no longer fits comfortably in memory.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// One representative of every isomorphism class of connected graphs on
/// `n` vertices, in ascending order of their edge bitmask.
///
/// Each labeled graph is encoded as a bitmask over the `n(n-1)/2` vertex
/// pairs. Walking masks in ascending order, the first unseen mask of each
/// class is kept and its whole orbit under vertex permutations is marked.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_ENUMERATION_ORDER).contains(&n),
        "connected_graphs supports 1..={MAX_ENUMERATION_ORDER} vertices"
    );
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut pair_index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        pair_index[u][v] = i;
        pair_index[v][u] = i;
    }
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let total = 1usize << pairs.len();
    let mut seen = vec![false; total];
    let mut out = Vec::new();

    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        for perm in &perms {
            let image = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .fold(0usize, |acc, (_, &(u, v))| {
                    acc | 1 << pair_index[perm[u]][perm[v]]
                });
            seen[image] = true;
        }
        let g = Graph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .expect("pairs are distinct and in range");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Connected graphs on `1..=max_n` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}
