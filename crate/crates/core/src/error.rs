use thiserror::Error;

use crate::graph::OddCycle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntSetError {
    #[error("integer sets must be non-empty")]
    Empty,
    #[error("malformed integer set `{0}`, expected `{{a,b,c}}`")]
    Syntax(String),
    #[error("set elements must be strictly ascending in `{0}`")]
    NotAscending(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} refers to a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("{family} needs {requirement}")]
    BadFamilyParameter {
        family: &'static str,
        requirement: &'static str,
    },
    #[error("parent array: {0}")]
    MalformedParents(String),
}

/// A failure while reading one of the text formats, with its 1-based line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling covers {labels} vertices but the graph has {vertices}")]
    SizeMismatch { labels: usize, vertices: usize },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("embedding is not a subgraph embedding: {0}")]
    InvalidEmbedding(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("graph is not bipartite; odd cycle {0}")]
    NotBipartite(OddCycle),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("aborted: budget of {budget} steps exhausted before the space was covered")]
    BudgetExceeded { budget: u64 },
    #[error("invalid search space: {0}")]
    InvalidSpace(String),
}
