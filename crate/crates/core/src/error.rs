use thiserror::Error;

use crate::graph::Vertex;

/// Errors produced by graph construction, parsing and the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("graph has {0} edges; at most {max} are supported", max = crate::graph::MAX_EDGES)]
    TooManyEdges(usize),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge-list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("edge set is not a matching: vertex {0} is covered twice")]
    NotAMatching(Vertex),

    #[error("edge set contains index {0}, which is not an edge of the graph")]
    ForeignEdge(usize),

    #[error("matchings are not disjoint")]
    NotDisjoint,

    #[error("matching of size {size} is not maximum (nu = {nu})")]
    NotMaximum { size: usize, nu: usize },

    #[error("pair of total size {total} is not in Lambda (lambda = {lambda})")]
    NotInLambda { total: usize, lambda: usize },

    #[error("pair with |H| = {size} is not in Lambda_mu (mu = {mu})")]
    NotInLambdaMu { size: usize, mu: usize },

    #[error("not a path/even-cycle decomposition: {0}")]
    NotPec(String),

    #[error("subgraph is not contained in the graph")]
    NotASubgraph,

    #[error("search budget exhausted after {0} nodes")]
    BudgetExhausted(u64),

    #[error("internal consistency failure on {graph6}: {message}")]
    Inconsistent { graph6: String, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
