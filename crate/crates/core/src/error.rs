use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,
    #[error("unknown vertex {0}")]
    UnknownVertex(i64),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("truncation bound too small or ideal not admissible (tried up to L={0})")]
    Truncation(usize),
    #[error("invalid algebra table: {0}")]
    InvalidAlgebra(String),
    #[error("radical unavailable; supply presentation-adapted basis")]
    RadicalUnavailable,
    #[error("ideal not nilpotent")]
    IdealNotNilpotent,
    #[error("zero idempotent")]
    ZeroIdempotent,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("zero module")]
    ZeroModule,
    #[error("tau requires symmetric algebra")]
    NotSymmetric,
    #[error("iso test inconclusive")]
    IsoInconclusive,
    #[error("enumerate bound exceeded")]
    EnumerateBound,
    #[error("orbit mismatch: {0}")]
    OrbitMismatch(String),
    #[error("invalid RFSy type: {0}")]
    InvalidType(String),
    #[error("incompatible vertex role: {0}")]
    IncompatibleRole(String),
    #[error("associativity violated at basis triple ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
