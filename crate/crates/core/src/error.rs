use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("potential mismatch: {0}")]
    PotentialMismatch(String),
    #[error("critical point is not isolated (Milnor algebra is infinite dimensional)")]
    NonIsolated,
    #[error("polynomial is not quasi-homogeneous")]
    NotQuasiHomogeneous,
    #[error("cohomology is infinite dimensional")]
    InfiniteDimensional,
    #[error("input is not gradable: {0}")]
    NotGradable(String),
    #[error("endomorphism is not closed: {0}")]
    NotClosed(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("the two Ext algorithms disagree: {0}")]
    OracleMismatch(String),
    #[error("sign conventions disagree across calibration cases: {0}")]
    ConventionInconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
