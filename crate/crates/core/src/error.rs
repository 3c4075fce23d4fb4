use thiserror::Error;

/// Errors raised while building or querying graphs and vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{family} needs {min} or more vertices, got {got}")]
    TooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("complete multipartite graph needs at least one part")]
    NoParts,
    #[error("part {index} of a complete multipartite graph is empty")]
    EmptyPart { index: usize },
    #[error("vertex set is over {set_n} vertices but the graph has {graph_n}")]
    OwnerMismatch { set_n: usize, graph_n: usize },
    #[error("distance to an empty vertex set is undefined")]
    EmptyTarget,
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("permutation of length {len} is not a bijection on {n} vertices")]
    BadPermutation { len: usize, n: usize },
}

/// Errors raised by the graph6 codec.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("directed (&) and sparse (:) graph6 variants are not supported")]
    UnsupportedVariant,
    #[error("vertex count header is truncated")]
    TruncatedHeader,
    #[error("graphs with {0} vertices exceed the supported 4-byte header range")]
    TooManyVertices(u64),
    #[error("expected {expected} data bytes for {n} vertices, found {found}")]
    BadLength { n: usize, expected: usize, found: usize },
    #[error("padding bits in the final byte are not zero")]
    NonzeroPadding,
}

/// Errors raised by maximal independent set enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MisError {
    #[error("more than {cap} maximal independent sets; enumeration aborted")]
    CapExceeded { cap: u64 },
}

/// Errors raised by the claim checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Mis(#[from] MisError),
    #[error("parameter out of range: {0}")]
    BadParameter(&'static str),
    #[error("the given vertex set is not independent")]
    NotIndependent,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("witness construction failed: {0}")]
    WitnessFailure(&'static str),
}

/// Errors raised by isomorph-free generation and table-cell searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search visited more than {budget} augmentation nodes")]
    NodeBudgetExceeded { budget: u64 },
    #[error("canonical labelling supports at most 64 vertices, got {0}")]
    TooLarge(usize),
    #[error("invalid generation parameters: {0}")]
    BadSpec(&'static str),
    #[error(transparent)]
    Mis(#[from] MisError),
}
