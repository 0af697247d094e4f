use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("missing edge ({0}, {1})")]
    MissingEdge(usize, usize),
    #[error("invalid cut: side must be nonempty and proper")]
    InvalidCut,
    #[error("{what}: {n} vertices exceeds the budget of {limit}")]
    TooLargeForExact { what: &'static str, n: usize, limit: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degree {d} exceeds side size {n}")]
    InfeasibleDegree { n: usize, d: usize },
    #[error("expander certification failed for N={n}, d={d}")]
    CertificationFailed { n: usize, d: usize },
    #[error("index out of range: {0}")]
    InvalidIndex(String),
    #[error("allocation infeasible: quota {quota} exceeds side size {n}")]
    AllocationInfeasible { quota: usize, n: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("bipartition sides differ: {0} vs {1}")]
    UnequalParts(usize, usize),
    #[error("fewer than {needed} free L vertices for vertex {v}")]
    CapacityExhausted { v: usize, needed: usize },
    #[error("density too low: m = {m} must exceed 42n = {bound}")]
    DensityTooLow { m: usize, bound: usize },
    #[error("density too high: rho(G) = {rho} is not below C + 1/2")]
    DensityTooHigh { rho: String },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("unsupported pattern: {0}")]
    UnsupportedPattern(String),
    #[error("no hitting set of size {size} satisfies the neighbour-fraction condition")]
    HittingSetFailed { size: usize },
    #[error("expander has no non-edge to anchor s and t")]
    AnchorUnavailable,
    #[error("unknown claim kind {0:?}")]
    UnknownClaim(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
