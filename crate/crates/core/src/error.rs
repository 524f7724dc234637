use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("arcs {0}->{1} and {1}->{0} form a 2-cycle")]
    TwoCycle(usize, usize),
    #[error("coloring assigns {colored} vertices but the graph has {count}")]
    PartialColoring { colored: usize, count: usize },
    #[error("vertex {0} has color 0; colors are positive integers")]
    ZeroColor(usize),
    #[error("invalid color order: {0}")]
    InvalidOrder(String),
    #[error("coloring is not proper: edge {0} {1} is monochromatic")]
    ImproperColoring(usize, usize),
    #[error("digraph contains a directed cycle")]
    DirectedCycle,
    #[error("{what}: size {actual} exceeds guard {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("image has {actual} entries, tree has {expected} vertices")]
    ImageLength { expected: usize, actual: usize },
    #[error("image is not injective: host vertex {0} used twice")]
    NonInjective(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no {kind} found in residual digraph at layer {layer}")]
    KernelNotFound { kind: &'static str, layer: usize },
    #[error("retry budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("host contract breach: {0}")]
    HostContract(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Whether the error stems from the caller's input rather than from a
    /// search or construction that ran out of room.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::KernelNotFound { .. } | Error::BudgetExhausted(_) | Error::HostContract(_)
        )
    }
}
