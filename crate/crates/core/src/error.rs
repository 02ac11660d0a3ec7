use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported field size {0}: expected 4 or a prime below {limit}", limit = crate::galois::PRIME_LIMIT)]
    UnsupportedField(u32),

    #[error("element encoding {value} out of range for F_{q}")]
    InvalidElement { value: u32, q: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("no square root of -1 in F_{0}")]
    NoSqrtMinusOne(u32),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("operands live in different fields (F_{0} vs F_{1})")]
    FieldMismatch(u32, u32),

    #[error("budget exceeded: needed {needed} > budget {budget}{}", partial_note(.partial_bound))]
    BudgetExceeded {
        needed: u128,
        budget: u128,
        /// Best upper bound on the minimum distance seen before giving up.
        partial_bound: Option<usize>,
    },

    #[error("evenness is defined only over F_2 (got F_{0})")]
    NotBinary(u32),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inconsistent weight distribution: {0}")]
    InconsistentDistribution(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("checkpoint does not match this search: {0}")]
    CheckpointMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn partial_note(bound: &Option<usize>) -> String {
    match bound {
        Some(d) => format!(" (partial bound d <= {d})"),
        None => String::new(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
