//! Closed-form existence decisions.
//!
//! A graph carries a `k`-uniform IASI when `k` is odd or the graph is
//! bipartite; it carries a weakly `k`-uniform IASI for `k > 1` exactly
//! when it is bipartite, and always for `k = 1`.
//!
//! Positive answers are constructive: [`Decision::witness`] builds a
//! labeling with the matching constructor. Negative answers for `k = 2`
//! and for weak uniformity follow from bipartiteness. Negative answers for
//! even `k >= 4` on non-bipartite graphs come from the closed-form rule
//! alone and are not confirmed by search: the triangle labeled
//! `{0,1}, {0,3}, {0,5}` has edge labels `{0,1,3,4}`, `{0,1,5,6}` and
//! `{0,3,5,8}`, a 4-uniform IASI.

use std::fmt;

use serde::Serialize;

use crate::construct::{
    construct_uniform_bipartite, construct_uniform_odd, construct_weakly_uniform, params_for_k,
    ConstructionMode,
};
use crate::error::ConstructError;
use crate::graph::{two_coloring, Bipartition, Graph, OddCycle};
use crate::labeling::Labeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    KOdd,
    BipartiteAnyK,
    NonbipartiteEvenK,
    WeaklyK1Always,
    WeaklyBipartite,
    WeaklyNonbipartite,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::KOdd => "k_odd",
            Rule::BipartiteAnyK => "bipartite_any_k",
            Rule::NonbipartiteEvenK => "nonbipartite_even_k",
            Rule::WeaklyK1Always => "weakly_k1_always",
            Rule::WeaklyBipartite => "weakly_bipartite",
            Rule::WeaklyNonbipartite => "weakly_nonbipartite",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Certificate {
    Bipartition(Bipartition),
    OddCycle(OddCycle),
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Bipartition(b) => write!(f, "bipartition {b}"),
            Certificate::OddCycle(c) => write!(f, "odd cycle {c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub exists: bool,
    pub k: usize,
    pub weakly: bool,
    pub rule: Rule,
    /// The 2-coloring outcome; `None` only for the `k = 1` weak rule, which
    /// does not look at the graph.
    pub certificate: Option<Certificate>,
}

impl Decision {
    /// Builds the labeling backing a positive decision; `None` when
    /// `exists` is false.
    pub fn witness(&self, g: &Graph) -> Option<Result<Labeling, ConstructError>> {
        if !self.exists {
            return None;
        }
        Some(match self.rule {
            Rule::KOdd => params_for_k(self.k, ConstructionMode::Odd)
                .and_then(|p| construct_uniform_odd(g, p.m, p.d)),
            Rule::BipartiteAnyK => params_for_k(self.k, ConstructionMode::Bipartite)
                .and_then(|p| construct_uniform_bipartite(g, p.m, p.n, p.d)),
            _ => construct_weakly_uniform(g, self.k),
        })
    }
}

fn coloring_certificate(g: &Graph) -> (bool, Certificate) {
    match two_coloring(g) {
        Ok(b) => (true, Certificate::Bipartition(b)),
        Err(c) => (false, Certificate::OddCycle(c)),
    }
}

/// Whether `g` admits a `k`-uniform IASI. When `k` is odd the rule is
/// `k_odd` even if `g` is also bipartite.
pub fn admits_uniform(g: &Graph, k: usize) -> Decision {
    assert!(k >= 1, "k must be positive");
    let (bipartite, certificate) = coloring_certificate(g);
    let (exists, rule) = if k % 2 == 1 {
        (true, Rule::KOdd)
    } else if bipartite {
        (true, Rule::BipartiteAnyK)
    } else {
        (false, Rule::NonbipartiteEvenK)
    };
    Decision {
        exists,
        k,
        weakly: false,
        rule,
        certificate: Some(certificate),
    }
}

pub fn admits_weakly_uniform(g: &Graph, k: usize) -> Decision {
    assert!(k >= 1, "k must be positive");
    if k == 1 {
        return Decision {
            exists: true,
            k,
            weakly: true,
            rule: Rule::WeaklyK1Always,
            certificate: None,
        };
    }
    let (bipartite, certificate) = coloring_certificate(g);
    Decision {
        exists: bipartite,
        k,
        weakly: true,
        rule: if bipartite {
            Rule::WeaklyBipartite
        } else {
            Rule::WeaklyNonbipartite
        },
        certificate: Some(certificate),
    }
}
