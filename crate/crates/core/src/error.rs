use thiserror::Error;

/// Errors raised anywhere in the engine.
///
/// The variants are grouped by the exit-code vocabulary the command line
/// uses: input problems, selector problems, resource guards, and violated
/// theorems (which always indicate a bug in this crate).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("invalid label {0}: finite labels must be at least 3")]
    InvalidLabel(u64),
    #[error("field context mismatch: {0}")]
    ContextMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("label {0} is not representable in this scalar type")]
    Unrepresentable(String),

    #[error("matrix is not square: row {row} has {len} entries, expected {rank}")]
    NotSquare { row: usize, len: usize, rank: usize },
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("diagonal entry ({i}, {i}) must be 1")]
    BadDiagonal { i: usize },
    #[error("off-diagonal entry ({i}, {j}) must be at least 2")]
    BadOffDiagonal { i: usize, j: usize },
    #[error("Coxeter graph is disconnected; only irreducible systems are supported")]
    Reducible,
    #[error("the system is not a cyclic Coxeter graph")]
    NotCyclic,
    #[error("input document: {0}")]
    Parse(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("generator {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("vector has coordinates of both signs; not a root")]
    NotARoot,
    #[error("word is not reduced")]
    NotReduced,
    #[error("matrix does not reduce to the identity within {0} steps")]
    NotAGroupElement(usize),
    #[error("standard form needs i != k (got {0})")]
    InvalidStandardForm(usize),
    #[error("word {0} does not use every generator exactly once")]
    NotACoxeterWord(String),
    #[error("orientation contains a directed cycle")]
    CyclicOrientation,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("selector: {0}")]
    Selector(String),

    #[error("resource guard exceeded: {0}")]
    Resource(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("theorem contradiction: {0}")]
    TheoremContradiction(String),
}

impl CoxeterError {
    /// Process exit code: 1 input or usage, 2 selector, 3 resource guard,
    /// 4 violated theorem or internal invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            CoxeterError::Selector(_) => 2,
            CoxeterError::Resource(_) => 3,
            CoxeterError::Internal(_) | CoxeterError::TheoremContradiction(_) => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CoxeterError>;
