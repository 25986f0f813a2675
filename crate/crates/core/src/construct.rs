//! Constructive labelings: weakly `k`-uniform labelings of bipartite
//! graphs, `(m + n - 1)`-uniform labelings of bipartite graphs, and
//! `(2m - 1)`-uniform labelings of arbitrary graphs.
//!
//! Every vertex label is an arithmetic progression anchored at a point of
//! a Sidon sequence, one point per vertex. Two progressions with the same
//! difference `d` and lengths `a`, `b` sum to the progression of length
//! `a + b - 1` anchored at the sum of their anchors, so an edge label is
//! determined by the anchor sum of its endpoints. Anchor sums of distinct
//! vertex pairs never coincide in a Sidon sequence, which makes the edge
//! labels pairwise distinct. Anchoring at `1, 2, ..., n` instead would let
//! edges `{i, j}` and `{i', j'}` with `i + j = i' + j'` collide.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::ConstructError;
use crate::graph::{two_coloring, Graph, Side};
use crate::intset::{sidon_sequence, ApDescriptor, IntSet};
use crate::labeling::Labeling;

/// Smallest anchor handed out by the constructors.
pub const ANCHOR_MINIMUM: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstructionMode {
    Weakly,
    Bipartite,
    Odd,
}

impl fmt::Display for ConstructionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructionMode::Weakly => "weakly",
            ConstructionMode::Bipartite => "bipartite",
            ConstructionMode::Odd => "odd",
        })
    }
}

impl FromStr for ConstructionMode {
    type Err = ConstructError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "weakly" => Ok(Self::Weakly),
            "bipartite" => Ok(Self::Bipartite),
            "odd" => Ok(Self::Odd),
            other => Err(ConstructError::InvalidParams(format!(
                "unknown mode `{other}`"
            ))),
        }
    }
}

/// Label lengths and common difference for one construction.
///
/// `m` is the label length on the left side (or on every vertex in odd
/// mode), `n` on the right side; `k` is the resulting edge label size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UniformParams {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub d: u64,
}

/// Canonical parameters producing edge labels of size `k`.
///
/// Weakly and bipartite modes use `m = 1, n = k`; odd mode uses
/// `m = n = (k + 1) / 2`. The difference is always 1.
pub fn params_for_k(k: usize, mode: ConstructionMode) -> Result<UniformParams, ConstructError> {
    if k == 0 {
        return Err(ConstructError::InvalidParams("k must be positive".into()));
    }
    match mode {
        ConstructionMode::Weakly | ConstructionMode::Bipartite => Ok(UniformParams {
            k,
            m: 1,
            n: k,
            d: 1,
        }),
        ConstructionMode::Odd if k % 2 == 1 => {
            let m = k.div_ceil(2);
            Ok(UniformParams { k, m, n: m, d: 1 })
        }
        ConstructionMode::Odd => Err(ConstructError::InvalidParams(format!(
            "odd mode needs an odd k, got {k}"
        ))),
    }
}

fn anchors(count: usize) -> Vec<u64> {
    if count == 0 {
        Vec::new()
    } else {
        sidon_sequence(count, ANCHOR_MINIMUM)
    }
}

fn progression(start: u64, difference: u64, length: usize) -> IntSet {
    IntSet::arithmetic_progression(ApDescriptor::new(start, difference, length))
}

fn check_positive(name: &str, value: u64) -> Result<(), ConstructError> {
    if value == 0 {
        Err(ConstructError::InvalidParams(format!(
            "{name} must be at least 1"
        )))
    } else {
        Ok(())
    }
}

/// Singletons on one side of a bipartition, `k`-element intervals on the
/// other, so every edge label has exactly `k` elements.
///
/// Singletons go to the side holding each component's lowest vertex;
/// isolated vertices get `k`-element labels. For `k = 1` every vertex is a
/// singleton and any graph qualifies. For `k > 1` the graph must be
/// bipartite; otherwise the error carries an odd cycle.
pub fn construct_weakly_uniform(g: &Graph, k: usize) -> Result<Labeling, ConstructError> {
    check_positive("k", k as u64)?;
    let anchors = anchors(g.vertex_count());
    if k == 1 {
        return Ok(Labeling::new(
            anchors.into_iter().map(IntSet::singleton).collect(),
        ));
    }
    let sides = two_coloring(g).map_err(ConstructError::NotBipartite)?;
    let labels = g
        .vertices()
        .map(|v| {
            if g.degree(v) > 0 && sides.side(v) == Side::Left {
                IntSet::singleton(anchors[v])
            } else {
                progression(anchors[v], 1, k)
            }
        })
        .collect();
    Ok(Labeling::new(labels))
}

/// Length-`m` progressions on the left side and length-`n` progressions on
/// the right, all with difference `d`; every edge label has `m + n - 1`
/// elements.
pub fn construct_uniform_bipartite(
    g: &Graph,
    m: usize,
    n: usize,
    d: u64,
) -> Result<Labeling, ConstructError> {
    check_positive("m", m as u64)?;
    check_positive("n", n as u64)?;
    check_positive("d", d)?;
    let sides = two_coloring(g).map_err(ConstructError::NotBipartite)?;
    let anchors = anchors(g.vertex_count());
    let labels = g
        .vertices()
        .map(|v| {
            let length = match sides.side(v) {
                Side::Left => m,
                Side::Right => n,
            };
            progression(anchors[v], d, length)
        })
        .collect();
    Ok(Labeling::new(labels))
}

/// A length-`m` progression with difference `d` on every vertex; every
/// edge label has `2m - 1` elements. Works on any graph.
pub fn construct_uniform_odd(g: &Graph, m: usize, d: u64) -> Result<Labeling, ConstructError> {
    check_positive("m", m as u64)?;
    check_positive("d", d)?;
    let labels = anchors(g.vertex_count())
        .into_iter()
        .map(|a| progression(a, d, m))
        .collect();
    Ok(Labeling::new(labels))
}

/// Dispatches on `mode` with the given parameters.
pub fn construct(
    g: &Graph,
    mode: ConstructionMode,
    params: UniformParams,
) -> Result<Labeling, ConstructError> {
    match mode {
        ConstructionMode::Weakly => construct_weakly_uniform(g, params.k),
        ConstructionMode::Bipartite => construct_uniform_bipartite(g, params.m, params.n, params.d),
        ConstructionMode::Odd => construct_uniform_odd(g, params.m, params.d),
    }
}
