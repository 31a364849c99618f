use thiserror::Error;

use crate::structure::Elem;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("carrier size must be at least 1")]
    EmptyCarrier,

    #[error("gamma must contain at least one label")]
    EmptyGamma,

    #[error("duplicate gamma label `{0}`")]
    DuplicateGammaLabel(String),

    #[error("unknown gamma label `{0}`")]
    UnknownGamma(String),

    #[error("{table} table has {got} entries, expected {expected}")]
    TableShape {
        table: String,
        expected: usize,
        got: usize,
    },

    #[error("{table} entry #{index} is {value}, out of range for carrier size {n}")]
    EntryRange {
        table: String,
        index: usize,
        value: usize,
        n: usize,
    },

    #[error("0 is not an additive identity: 0 + {a} = {got}")]
    IdentityAtZero { a: Elem, got: Elem },

    #[error("element {value} out of range for carrier size {n}")]
    ElementRange { value: usize, n: usize },

    #[error("gamma lists differ between operands")]
    GammaMismatch,

    #[error("carrier sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("map has {got} entries, expected {expected}")]
    MapLength { expected: usize, got: usize },

    #[error("relabeling is not a bijection fixing 0")]
    BadRelabeling,

    #[error(
        "induced operation `{op}` is ill-defined on blocks: inputs {lhs_inputs:?} ~ {rhs_inputs:?} \
         but values {lhs_value} !~ {rhs_value}"
    )]
    IllDefinedQuotient {
        op: String,
        lhs_inputs: Vec<Elem>,
        rhs_inputs: Vec<Elem>,
        lhs_value: Elem,
        rhs_value: Elem,
    },

    #[error("{what} {requested} exceeds the configured bound {limit}")]
    BoundExceeded {
        what: String,
        limit: usize,
        requested: usize,
    },

    #[error("search space of {required} vectors exceeds the budget {budget}")]
    BudgetExceeded { budget: u64, required: u64 },

    #[error("addition is not idempotent: {witness} + {witness} != {witness}")]
    NotIdempotentAdd { witness: Elem },

    #[error("grade for element {element} is {grade}, outside [0, 1]")]
    GradeRange { element: usize, grade: String },

    #[error("level sets do not form a chain: grades {alpha} and {beta} give incomparable cuts")]
    NotAChain { alpha: String, beta: String },

    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("enumeration requires axiom mode with C enabled (symmetric tensors)")]
    ModeWithoutSymmetry,

    #[error("invalid {what}: {message}")]
    Parse { what: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
