use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("polynomial is not monic")]
    NonMonic,
    #[error("constant term is not ±1")]
    ConstantTermNotUnit,
    #[error("cannot parse polynomial from `{0}`")]
    ParseError(String),
}

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("bound r must be > 1, got {0}")]
    BoundNotAboveOne(String),
    #[error("degree must be >= 2, got {0}")]
    DegreeTooSmall(usize),
}

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("n and k must have different parity (got n={n}, k={k})")]
    ParityViolation { n: u64, k: u64 },
    #[error("require n >= 3 and 1 <= k <= n-1 (got n={n}, k={k})")]
    RangeViolation { n: u64, k: u64 },
    #[error("k must be even and >= 2 for the orientation-reversing family (got k={0})")]
    OddK(u64),
    #[error("no family member exists for genus {0}")]
    NoFamilyMember(u64),
    #[error("matrix dimension must be even, got {0}")]
    OddDimension(usize),
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("integer overflow escalated past the wide fixed-width path")]
    OverflowEscalation,
    #[error("checkpoint I/O error: {0}")]
    CheckpointIo(#[from] std::io::Error),
    #[error("corrupt checkpoint record at line {line}: {reason}")]
    CorruptCheckpoint { line: usize, reason: String },
    #[error("checkpoint belongs to a different run configuration: {0}")]
    CheckpointMismatch(String),
}
