use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polytope is empty")]
    Empty,
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("segment length must be positive, got {0}")]
    NonPositiveLength(String),
    #[error("zero direction vector")]
    ZeroDirection,
    #[error("hull coverage failure: {0}")]
    Coverage(String),
    #[error("graph has a loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vector system contains parallel vectors {0} and {1}")]
    ParallelVectors(usize, usize),
    #[error("vector {0} is not a root of D4")]
    NotARoot(String),
    #[error("not three disjoint triples: {0}")]
    NotThreeTriples(String),
    #[error("no Conway label matches this matroid")]
    Unlabelable,
    #[error("polytope is not a parallelotope")]
    NotParallelotope,
    #[error("too many generators: {0} (limit 12)")]
    TooManyGenerators(usize),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("enumeration mismatch: {0}")]
    Enumeration(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
