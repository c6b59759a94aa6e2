use thiserror::Error;

/// Errors raised by the max-plus algebra, the walk engine and the reference models.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {actual}")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        actual: usize,
    },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("tropical determinant is enumerated only up to n = {max}, got n = {n}")]
    DeterminantTooLarge { n: usize, max: usize },

    #[error(
        "graph has a circuit of positive weight through vertex {vertex}; the star series diverges"
    )]
    PositiveCircuit { vertex: usize },

    #[error("no critical vertex found for eigenvalue {lambda}")]
    NoCriticalVertex { lambda: String },

    #[error("eigenvalue must be finite")]
    EpsilonEigenvalue,

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("position {k} is not reachable at time {n}: n and k must have the same parity")]
    Parity { n: usize, k: i64 },

    #[error("position {k} lies outside the light cone |k| <= {n}")]
    OutOfRange { n: usize, k: i64 },

    #[error("condition (A) violated: a+d = {a_plus_d}, b+c = {b_plus_c}")]
    ConditionAViolated { a_plus_d: String, b_plus_c: String },

    #[error("window radius must be at least {min}, got {radius}")]
    WindowRadius { radius: usize, min: usize },

    #[error("power {n} exceeds window radius {radius}")]
    PowerExceedsWindow { n: usize, radius: usize },

    #[error("initial state must have at least one finite component")]
    EmptySeed,

    #[error("coin is not unitary: {0}")]
    NotUnitary(String),

    #[error("coin entry {0} is zero; the interior closed form divides by it")]
    ZeroCoinEntry(&'static str),

    #[error("initial state does not satisfy the weak-limit hypothesis: {0}")]
    WeakLimitHypothesis(String),

    #[error("parameter out of range: {0}")]
    Domain(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
