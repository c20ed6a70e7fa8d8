use thiserror::Error;

/// Errors raised by graph construction, parsing and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("vertex set {0} is not a component of the uncoloured subgraph")]
    NotAComponent(String),
    #[error("creation sequence: {0}")]
    CreationSequence(String),
    #[error("q = {q} outside {lo}..={hi}")]
    QOutOfRange { q: usize, lo: usize, hi: usize },
    #[error("colouring is not closed under the colour change rule")]
    NotClosed,
    #[error("coloured set must be nonempty and a proper subset of the vertices")]
    TrivialColouring,
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("matrix has a non-finite entry")]
    NonFinite,
    #[error("tolerance must be positive, got {0}")]
    Tolerance(f64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("memo table exceeded its limit of {0} entries")]
    MemoOverflow(usize),
    #[error("infeasible: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
