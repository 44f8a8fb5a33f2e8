use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("operands have different variable counts ({left} vs {right})")]
    VariableMismatch { left: usize, right: usize },

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { msg: String, line: usize, col: usize },

    #[error("ordering carries no normality certificate; refusing to run the basis engine")]
    UncertifiedOrdering,

    #[error("a {needed} ordering is required here")]
    WrongOrderingKind { needed: &'static str },

    #[error("computation budget exceeded while {what}")]
    BudgetExceeded { what: String },

    #[error("ideal is not zero-dimensional (no finite staircase found within the degree budget)")]
    NotZeroDimensional,

    #[error("matrix has deficient rank; the rows did not come from lead-term-distinct basis elements")]
    RankDeficient,

    #[error("support does not touch every coordinate axis")]
    NotConvenient,

    #[error("principal part is degenerate on a compact face")]
    DegeneratePrincipalPart,

    #[error("not the germ of an isolated singularity at the origin: {reason}")]
    InvalidGerm { reason: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
