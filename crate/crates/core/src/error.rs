use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid dimension n = {n}: {reason}")]
    InvalidDimension { n: u32, reason: &'static str },

    #[error("vertex {value} does not fit in {n} bits")]
    VertexOutOfRange { value: u64, n: u32 },

    #[error("labels of different lengths: {left} and {right}")]
    LengthMismatch { left: u32, right: u32 },

    #[error("dimension label {dim} is not an edge dimension of AQ_{n}")]
    InvalidDimLabel { dim: i32, n: u32 },

    #[error("edge subsets overlap on arc ({lo}, {hi})")]
    OverlappingSubsets { lo: u32, hi: u32 },

    #[error("index {index} outside [1, {len}]")]
    IndexOutOfRange { index: u64, len: u64 },

    #[error("no spine orientation satisfies the dimension families at n = {n}")]
    NoConsistentNaming { n: u32 },

    #[error("{what} at n = {n} evaluates to the non-integer {value}")]
    NonIntegral { what: String, n: i64, value: String },

    #[error("{what} at n = {n}: {left} != {right}")]
    Mismatch {
        what: String,
        n: i64,
        left: String,
        right: String,
    },

    #[error("malformed bit string {0:?}")]
    BadBitString(String),

    #[error("export failed: {0}")]
    Export(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Export(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Export(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Export(e.to_string())
    }
}
