use thiserror::Error;

use crate::scalar::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid modulus {0}: expected an odd prime")]
    InvalidModulus(u64),

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid coefficient {text:?}: {reason}")]
    InvalidCoefficient { text: String, reason: String },

    #[error("structure constant index ({i}, {j}, {k}) out of range for dimension {dim}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        k: usize,
        dim: usize,
    },

    #[error("algebra dimension must be positive")]
    EmptyAlgebra,

    #[error("{name} violates the right Leibniz identity ({failures} failing basis instances)")]
    NotLeibniz { name: String, failures: usize },

    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),

    #[error("B_k chain check failed: {0}")]
    ChainVerification(String),

    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("generator {0:?} has no assigned vector")]
    UnassignedGenerator(String),

    #[error("generator {name:?} is tagged as lying in B but its vector is not in the ideal")]
    TagOutsideIdeal { name: String },

    #[error("term of length {length} exceeds the cap of {cap}")]
    TermTooLong { length: usize, cap: usize },

    #[error("unknown ideal {0:?}")]
    UnknownIdeal(String),

    #[error("invalid algebra file: {0}")]
    Schema(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Schema(e.to_string())
    }
}
