use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// [`Error::kind`] yields the bare variant name, which the command-line
/// front end prints on standard error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertexInEdge { edge: usize, vertex: usize },
    #[error("edge {edge} duplicates edge {first}")]
    DuplicateEdge { edge: usize, first: usize },
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("search budget of {0} steps exceeded")]
    BudgetExceeded(u64),
    #[error("instance of size {size} exceeds the budget {budget}")]
    SizeBudgetExceeded { size: u128, budget: u128 },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("graph is not 3-regular (vertex {vertex} has degree {degree})")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph is not a regular bipartite graph with equal sides: {0}")]
    NotBipartiteRegular(String),
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),
    #[error("generators violate the power-coincidence condition: tau_{i}^{k} = tau_{j}^{l}")]
    Condition6Violated { i: usize, k: usize, j: usize, l: usize },
    #[error("hypergraph is not 3-uniform (edge {edge} has {size} vertices)")]
    NotThreeUniform { edge: usize, size: usize },
    #[error("cap {cap} exceeds the maximum {max}")]
    CapTooLarge { cap: usize, max: usize },
    #[error("line {line}: {message}")]
    ParseError { line: usize, message: String },
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::RepeatedVertexInEdge { .. } => "RepeatedVertexInEdge",
            Error::DuplicateEdge { .. } => "DuplicateEdge",
            Error::EmptyEdge { .. } => "EmptyEdge",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::InvalidParams(_) => "InvalidParams",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::SizeBudgetExceeded { .. } => "SizeBudgetExceeded",
            Error::InvariantViolation(_) => "InvariantViolation",
            Error::NotCubic { .. } => "NotCubic",
            Error::NotBipartiteRegular(_) => "NotBipartiteRegular",
            Error::ParamMismatch(_) => "ParamMismatch",
            Error::Condition6Violated { .. } => "Condition6Violated",
            Error::NotThreeUniform { .. } => "NotThreeUniform",
            Error::CapTooLarge { .. } => "CapTooLarge",
            Error::ParseError { .. } => "ParseError",
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::ParseError { line, message: message.into() }
    }
}
