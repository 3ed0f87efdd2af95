use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: missing vertex count")]
    MissingVertexCount { line: usize },
    #[error("line {line}: malformed token `{token}`")]
    Malformed { line: usize, token: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("graph6: expected {expected} bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: byte {byte:#04x} at position {pos} is out of range")]
    Graph6Byte { pos: usize, byte: u8 },
    #[error("graph6: short form supports at most 62 vertices, got {0}")]
    Graph6TooLarge(usize),

    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {0} does not exist")]
    MissingVertex(usize),
    #[error("edge {0}-{1} does not exist")]
    MissingEdge(usize, usize),
    #[error("vertex {0} appears twice")]
    DuplicateVertex(usize),

    #[error("graph is not a forest")]
    NotAForest,
    #[error("graph is not a tree")]
    NotATree,
    #[error("forest has an isolated vertex {0}")]
    IsolatedVertex(usize),

    #[error("{what}: n = {n} exceeds the limit {limit}")]
    LimitExceeded { what: &'static str, n: usize, limit: usize },

    #[error("illegal step at position {index}: vertex {vertex} footprints nothing new")]
    IllegalStep { index: usize, vertex: usize },
    #[error("vertex {0} is isolated and cannot appear in this kind of sequence")]
    IsolatedNotAllowed(usize),

    #[error("path {path} does not have {vertex} as an end-vertex")]
    NotAnEndVertex { path: usize, vertex: usize },
    #[error("invalid path cover: {0}")]
    InvalidCover(String),

    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("witness does not re-validate: {0}")]
    InvalidWitness(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
