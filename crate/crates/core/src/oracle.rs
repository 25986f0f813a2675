//! Exhaustive backtracking search for (weakly) `k`-uniform IASIs whose
//! labels are drawn from a bounded universe `{0..=universe_max}`.
//!
//! Labels are handled as bitmasks, and an edge label is the OR of the
//! neighbor's mask shifted by every element of the vertex's mask. This
//! path shares no code with [`crate::intset::sumset`], so the oracle can
//! check the constructors independently.
//!
//! Before touching labels, the search lists which per-vertex label sizes
//! can coexist: an edge between sizes `a` and `b` can only have `k`
//! elements if `a + b - 1 <= k <= a * b`, the classical bounds on the size
//! of a sumset of integer sets. Label candidates whose size pattern has no
//! feasible completion are skipped, which settles parity obstructions
//! such as odd cycles without walking the label space.
//!
//! A miss means only that nothing exists inside the searched space; it
//! says nothing about larger universes. Running out of budget is reported
//! separately as [`SearchError::BudgetExceeded`].

use std::collections::HashSet;

use serde::Serialize;

use crate::error::SearchError;
use crate::graph::{Graph, Vertex};
use crate::intset::IntSet;
use crate::labeling::{verify, Labeling};

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const DEFAULT_UNIVERSE_MAX: u32 = 12;
pub const DEFAULT_MAX_LABEL_SIZE: usize = 4;
/// Masks are `u32`, so the universe is at most `{0..=31}`.
pub const MAX_UNIVERSE: u32 = 31;
/// Size-pattern prefixes kept for pruning; past this the filter is dropped.
const MAX_SIZE_PREFIXES: usize = 1 << 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Any label size in `1..=max_label_size`; every edge label has `k` elements.
    Uniform,
    /// Label sizes restricted to `{1, k}`.
    Weakly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchSpace {
    pub universe_max: u32,
    pub max_label_size: usize,
    pub mode: SearchMode,
    pub k: usize,
    /// Maximum number of candidate checks before giving up.
    pub budget: u64,
}

impl SearchSpace {
    pub fn uniform(k: usize, universe_max: u32, max_label_size: usize) -> Self {
        Self {
            universe_max,
            max_label_size,
            mode: SearchMode::Uniform,
            k,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn weakly(k: usize, universe_max: u32) -> Self {
        Self {
            universe_max,
            max_label_size: k,
            mode: SearchMode::Weakly,
            k,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(self, budget: u64) -> Self {
        Self { budget, ..self }
    }

    fn allowed_sizes(&self) -> Vec<usize> {
        match self.mode {
            SearchMode::Uniform => (1..=self.max_label_size).collect(),
            SearchMode::Weakly if self.k == 1 => vec![1],
            SearchMode::Weakly => vec![1, self.k],
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.k == 0 {
            return Err(SearchError::InvalidSpace("k must be positive".into()));
        }
        if self.universe_max > MAX_UNIVERSE {
            return Err(SearchError::InvalidSpace(format!(
                "universe_max {} exceeds {MAX_UNIVERSE}",
                self.universe_max
            )));
        }
        if self.mode == SearchMode::Uniform && self.max_label_size == 0 {
            return Err(SearchError::InvalidSpace(
                "max_label_size must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Does `report` satisfy the predicate this space searches for?
    pub fn accepts(&self, report: &crate::labeling::VerificationReport) -> bool {
        match self.mode {
            SearchMode::Uniform => report.is_uniform(self.k),
            SearchMode::Weakly => report.is_weakly_uniform(self.k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Labeling),
    /// The whole space was covered without a hit.
    Exhausted,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&Labeling> {
        match self {
            SearchOutcome::Found(l) => Some(l),
            SearchOutcome::Exhausted => None,
        }
    }
}

/// First labeling in search order that satisfies `space`.
///
/// Vertices are assigned in descending degree order (ties by id) and each
/// vertex tries its candidate masks in ascending numeric order, so the
/// result is the lexicographically first hit in that order and does not
/// vary between runs.
pub fn search(g: &Graph, space: &SearchSpace) -> Result<SearchOutcome, SearchError> {
    let mut hits = run(g, space, 1, true)?;
    Ok(match hits.pop() {
        Some(l) => SearchOutcome::Found(l),
        None => SearchOutcome::Exhausted,
    })
}

/// Up to `limit` distinct labelings, in the same order [`search`] visits them.
pub fn enumerate_all(
    g: &Graph,
    space: &SearchSpace,
    limit: usize,
) -> Result<Vec<Labeling>, SearchError> {
    if limit == 0 {
        space.validate()?;
        return Ok(Vec::new());
    }
    run(g, space, limit, true)
}

fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn candidate_masks(universe_max: u32, sizes: &[usize]) -> Vec<u32> {
    let bits = universe_max as usize + 1;
    let mut masks = Vec::new();
    for &size in sizes {
        if size > bits {
            continue;
        }
        push_combinations(bits, size, 0, 0, &mut masks);
    }
    masks.sort_unstable();
    masks
}

fn push_combinations(bits: usize, remaining: usize, from: usize, acc: u32, out: &mut Vec<u32>) {
    if remaining == 0 {
        out.push(acc);
        return;
    }
    for b in from..=bits - remaining {
        push_combinations(bits, remaining - 1, b + 1, acc | 1 << b, out);
    }
}

fn mask_sum(a: u32, b: u32) -> u64 {
    let mut acc = 0u64;
    let mut rest = a;
    while rest != 0 {
        let shift = rest.trailing_zeros();
        acc |= (b as u64) << shift;
        rest &= rest - 1;
    }
    acc
}

fn mask_to_set(mask: u32) -> IntSet {
    IntSet::new((0..32u64).filter(|&i| mask >> i & 1 == 1)).expect("candidate masks are non-empty")
}

struct Searcher<'a> {
    space: &'a SearchSpace,
    order: Vec<Vertex>,
    /// For each depth, the depths of already-assigned neighbors.
    back_neighbors: Vec<Vec<usize>>,
    candidates_connected: &'a [u32],
    candidates_isolated: &'a [u32],
    isolated: Vec<bool>,
    assigned: Vec<u32>,
    used_vertex_masks: HashSet<u32>,
    used_edge_masks: HashSet<u64>,
    /// Size prefixes (in assignment order) that extend to a feasible
    /// size pattern; `None` disables the filter.
    size_prefixes: Option<HashSet<Vec<u8>>>,
    sizes: Vec<u8>,
    steps: u64,
    limit: usize,
    hits: Vec<Vec<u32>>,
}

impl<'a> Searcher<'a> {
    fn descend(&mut self, depth: usize) -> Result<(), SearchError> {
        if depth == self.order.len() {
            self.hits.push(self.assigned.clone());
            return Ok(());
        }
        let candidates = if self.isolated[depth] {
            self.candidates_isolated
        } else {
            self.candidates_connected
        };
        self.try_candidates(depth, candidates)
    }

    fn try_candidates(&mut self, depth: usize, candidates: &'a [u32]) -> Result<(), SearchError> {
        let mut new_edges: Vec<u64> = Vec::new();
        for &mask in candidates {
            self.steps += 1;
            if self.steps > self.space.budget {
                return Err(SearchError::BudgetExceeded {
                    budget: self.space.budget,
                });
            }
            if self.used_vertex_masks.contains(&mask) {
                continue;
            }
            if let Some(prefixes) = &self.size_prefixes {
                self.sizes.push(mask.count_ones() as u8);
                let feasible = prefixes.contains(&self.sizes);
                self.sizes.pop();
                if !feasible {
                    continue;
                }
            }
            new_edges.clear();
            let consistent = self.back_neighbors[depth].iter().all(|&other| {
                let edge = mask_sum(mask, self.assigned[other]);
                let ok = edge.count_ones() as usize == self.space.k
                    && !self.used_edge_masks.contains(&edge)
                    && !new_edges.contains(&edge);
                if ok {
                    new_edges.push(edge);
                }
                ok
            });
            if !consistent {
                continue;
            }

            self.assigned.push(mask);
            self.sizes.push(mask.count_ones() as u8);
            self.used_vertex_masks.insert(mask);
            self.used_edge_masks.extend(new_edges.iter().copied());
            let saved_edges = std::mem::take(&mut new_edges);
            let result = self.descend(depth + 1);
            for e in &saved_edges {
                self.used_edge_masks.remove(e);
            }
            new_edges = saved_edges;
            self.used_vertex_masks.remove(&mask);
            self.sizes.pop();
            self.assigned.pop();
            result?;
            if self.hits.len() >= self.limit {
                return Ok(());
            }
        }
        Ok(())
    }
}

fn sizes_compatible(a: usize, b: usize, k: usize) -> bool {
    a + b - 1 <= k && k <= a * b
}

/// Enumerates per-vertex size assignments in which every edge joins
/// compatible sizes, recording every prefix of every complete assignment.
struct SizePatterns<'a> {
    k: usize,
    options: &'a [&'a [usize]],
    back_neighbors: &'a [Vec<usize>],
    current: Vec<u8>,
    prefixes: HashSet<Vec<u8>>,
    overflow: bool,
    steps: u64,
    budget: u64,
}

impl SizePatterns<'_> {
    /// Returns whether the current prefix extends to a complete pattern.
    fn extend(&mut self) -> Result<bool, SearchError> {
        let depth = self.current.len();
        if depth == self.options.len() {
            return Ok(true);
        }
        let mut any = false;
        for &size in self.options[depth] {
            if self.overflow {
                return Ok(true);
            }
            self.steps += 1;
            if self.steps > self.budget {
                return Err(SearchError::BudgetExceeded {
                    budget: self.budget,
                });
            }
            let fits = self.back_neighbors[depth]
                .iter()
                .all(|&other| sizes_compatible(size, self.current[other] as usize, self.k));
            if !fits {
                continue;
            }
            self.current.push(size as u8);
            if self.extend()? {
                any = true;
                if self.prefixes.len() >= MAX_SIZE_PREFIXES {
                    self.overflow = true;
                } else if !self.overflow {
                    self.prefixes.insert(self.current.clone());
                }
            }
            self.current.pop();
        }
        Ok(any)
    }
}

fn run(
    g: &Graph,
    space: &SearchSpace,
    limit: usize,
    prune_sizes: bool,
) -> Result<Vec<Labeling>, SearchError> {
    space.validate()?;
    let sizes = space.allowed_sizes();
    let bits = space.universe_max as u64 + 1;
    let per_vertex: u64 = sizes
        .iter()
        .map(|&s| binomial(bits, s as u64))
        .fold(0, u64::saturating_add);
    if per_vertex > space.budget {
        return Err(SearchError::BudgetExceeded {
            budget: space.budget,
        });
    }

    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut depth_of = vec![0; g.vertex_count()];
    for (depth, &v) in order.iter().enumerate() {
        depth_of[v] = depth;
    }
    let back_neighbors: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(depth, &v)| {
            g.neighbors(v)
                .iter()
                .map(|&w| depth_of[w])
                .filter(|&dw| dw < depth)
                .collect()
        })
        .collect();

    // a label larger than k can never sit on an edge of size k
    let connected_sizes: Vec<usize> = sizes.iter().copied().filter(|&s| s <= space.k).collect();
    let isolated: Vec<bool> = order.iter().map(|&v| g.degree(v) == 0).collect();
    let size_options: Vec<&[usize]> = isolated
        .iter()
        .map(|&iso| {
            if iso {
                &sizes[..]
            } else {
                &connected_sizes[..]
            }
        })
        .collect();
    let mut patterns = SizePatterns {
        k: space.k,
        options: &size_options,
        back_neighbors: &back_neighbors,
        current: Vec::with_capacity(order.len()),
        prefixes: HashSet::new(),
        overflow: false,
        steps: 0,
        budget: space.budget,
    };
    patterns.extend()?;
    let size_prefixes = (prune_sizes && !patterns.overflow).then_some(patterns.prefixes);
    let pattern_steps = patterns.steps;
    let candidates_connected = candidate_masks(space.universe_max, &connected_sizes);
    let candidates_isolated = candidate_masks(space.universe_max, &sizes);
    let mut searcher = Searcher {
        space,
        isolated,
        order,
        back_neighbors: back_neighbors.clone(),
        candidates_connected: &candidates_connected,
        candidates_isolated: &candidates_isolated,
        assigned: Vec::with_capacity(g.vertex_count()),
        used_vertex_masks: HashSet::new(),
        used_edge_masks: HashSet::new(),
        size_prefixes,
        sizes: Vec::with_capacity(g.vertex_count()),
        steps: pattern_steps,
        limit,
        hits: Vec::new(),
    };
    searcher.descend(0)?;

    let order = searcher.order;
    Ok(searcher
        .hits
        .into_iter()
        .map(|masks| {
            let mut labels = vec![IntSet::singleton(0); masks.len()];
            for (depth, mask) in masks.into_iter().enumerate() {
                labels[order[depth]] = mask_to_set(mask);
            }
            let labeling = Labeling::new(labels);
            debug_assert!(space.accepts(&verify(g, &labeling)));
            labeling
        })
        .collect())
}
