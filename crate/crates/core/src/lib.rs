//! Uniform integer additive set-indexers (IASIs) of finite simple graphs.
//!
//! An IASI labels each vertex with a finite set of non-negative integers so
//! that vertex labels are pairwise distinct and the induced edge labels
//! `f(u) + f(v)` (sumsets) are pairwise distinct too. A labeling is
//! `k`-uniform when every edge label has exactly `k` elements, and weakly
//! `k`-uniform when in addition every vertex label has 1 or `k` elements.
//!
//! The crate provides sumset arithmetic ([`intset`]), graphs and
//! bipartiteness ([`graph`]), verification ([`labeling`]), constructions
//! ([`construct`]), closed-form existence decisions ([`decision`]) and a
//! brute-force search over bounded label universes ([`oracle`]).

pub mod construct;
pub mod decision;
pub mod error;
pub mod graph;
pub mod intset;
pub mod labeling;
pub mod oracle;

pub use construct::{
    construct, construct_uniform_bipartite, construct_uniform_odd, construct_weakly_uniform,
    params_for_k, ConstructionMode, UniformParams,
};
pub use decision::{admits_uniform, admits_weakly_uniform, Certificate, Decision, Rule};
pub use error::{ConstructError, GraphError, IntSetError, LabelingError, ParseError, SearchError};
pub use graph::{
    bipartition, is_subgraph, two_coloring, Bipartition, Graph, OddCycle, Side, Vertex,
};
pub use intset::{
    as_arithmetic_progression, cardinality_bounds, sidon_sequence, sumset, ApDescriptor, IntSet,
};
pub use labeling::{induced_edge_label, restrict, verify, Labeling, VerificationReport, Witness};
pub use oracle::{enumerate_all, search, SearchMode, SearchOutcome, SearchSpace};
