//! Finite sets of non-negative integers and their sumsets.
//!
//! [`IntSet`] is the label alphabet for vertices and edges. It is always
//! non-empty and stores its elements sorted ascending, so equality and
//! ordering are by value.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::IntSetError;

/// A non-empty finite set of non-negative integers, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct IntSet(Vec<u64>);

impl IntSet {
    /// Builds a set from arbitrary elements; duplicates are merged.
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Result<Self, IntSetError> {
        let mut elements: Vec<u64> = elements.into_iter().collect();
        if elements.is_empty() {
            return Err(IntSetError::Empty);
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(Self(elements))
    }

    pub fn singleton(x: u64) -> Self {
        Self(vec![x])
    }

    /// `{start, start + difference, ..., start + (length - 1) * difference}`.
    pub fn arithmetic_progression(ap: ApDescriptor) -> Self {
        Self(
            (0..ap.length)
                .map(|i| ap.start + i as u64 * ap.difference)
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; present for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn min(&self) -> u64 {
        self.0[0]
    }

    pub fn max(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for IntSet {
    type Err = IntSetError;

    /// Parses the `{a,b,c}` rendering. Elements must be strictly ascending;
    /// whitespace around elements is tolerated.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| IntSetError::Syntax(s.to_string()))?;
        if inner.trim().is_empty() {
            return Err(IntSetError::Empty);
        }
        let mut elements = Vec::new();
        for token in inner.split(',') {
            let token = token.trim();
            let x: u64 = token
                .parse()
                .map_err(|_| IntSetError::Syntax(s.to_string()))?;
            if elements.last().is_some_and(|&prev| prev >= x) {
                return Err(IntSetError::NotAscending(s.to_string()));
            }
            elements.push(x);
        }
        Ok(Self(elements))
    }
}

/// Describes the set `{start, start + difference, ..., start + (length - 1) * difference}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ApDescriptor {
    pub start: u64,
    pub difference: u64,
    pub length: usize,
}

impl ApDescriptor {
    pub fn new(start: u64, difference: u64, length: usize) -> Self {
        assert!(difference >= 1, "progression difference must be positive");
        assert!(length >= 1, "progression length must be positive");
        Self {
            start,
            difference,
            length,
        }
    }
}

/// `A + B = {a + b : a in A, b in B}`.
///
/// Element sums must fit in `u64`; overflow panics in debug builds. Use
/// [`checked_sumset`] when operands may be near the top of the range.
pub fn sumset(a: &IntSet, b: &IntSet) -> IntSet {
    let mut sums = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        for y in b.iter() {
            sums.push(x + y);
        }
    }
    sums.sort_unstable();
    sums.dedup();
    IntSet(sums)
}

pub fn checked_sumset(a: &IntSet, b: &IntSet) -> Option<IntSet> {
    let mut sums = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        for y in b.iter() {
            sums.push(x.checked_add(y)?);
        }
    }
    sums.sort_unstable();
    sums.dedup();
    Some(IntSet(sums))
}

/// `(max(|a|, |b|), |a| * |b|)`: every sumset cardinality lies in this range.
pub fn cardinality_bounds(a: &IntSet, b: &IntSet) -> (usize, usize) {
    (a.len().max(b.len()), a.len() * b.len())
}

/// Returns the progression describing `a` if its consecutive gaps are all
/// equal. Singletons report difference 1.
pub fn as_arithmetic_progression(a: &IntSet) -> Option<ApDescriptor> {
    let elements = a.elements();
    if elements.len() == 1 {
        return Some(ApDescriptor::new(elements[0], 1, 1));
    }
    let difference = elements[1] - elements[0];
    elements
        .windows(2)
        .all(|w| w[1] - w[0] == difference)
        .then(|| ApDescriptor::new(elements[0], difference, elements.len()))
}

/// Greedy Sidon sequence: `count` strictly increasing integers, all at least
/// `minimum`, such that every sum `s[p] + s[q]` with `p <= q` is distinct.
///
/// Each step takes the smallest integer above the previous element that
/// keeps all pairwise sums (including doubles) distinct. Starting from 1
/// this is the Mian-Chowla sequence 1, 2, 4, 8, 13, 21, ...
pub fn sidon_sequence(count: usize, minimum: u64) -> Vec<u64> {
    assert!(count >= 1, "sidon_sequence needs count >= 1");
    let mut seq = Vec::with_capacity(count);
    let mut sums: HashSet<u64> = HashSet::new();
    let mut candidate = minimum;
    let mut fresh = Vec::with_capacity(count + 1);
    while seq.len() < count {
        fresh.clear();
        fresh.extend(seq.iter().map(|&s| s + candidate));
        fresh.push(2 * candidate);
        // fresh sums are pairwise distinct because seq is strictly increasing
        if fresh.iter().all(|s| !sums.contains(s)) {
            sums.extend(fresh.iter().copied());
            seq.push(candidate);
        }
        candidate += 1;
    }
    seq
}
