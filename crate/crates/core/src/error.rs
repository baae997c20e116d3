use thiserror::Error;

/// Errors shared by the calculator modules and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclic group orders differ: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },

    #[error("{unit} is not a unit modulo {order}")]
    InvalidGenerator { unit: u64, order: u64 },

    #[error("induction index must be at least 1")]
    InvalidInductionIndex,

    #[error("stabilizer order {stabilizer} does not divide the degree {degree}")]
    NonDividingOrder { stabilizer: u64, degree: u64 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("(n, e) = ({n}, {e}) is excluded from the divisor-class basis")]
    ExcludedPair { n: u32, e: u32 },

    #[error("enumerating {rows}x{cols} matrices over F_{p} exceeds the budget; skipped")]
    EnumerationBudget { p: u32, rows: u32, cols: u32 },

    #[error("degree-1 maps form a projective bundle; use the lines classification")]
    LinesCase,

    #[error("the bigness test only supports classes without marked points")]
    MarkedPointsUnsupported,

    #[error("the degree tuple must be non-empty")]
    EmptyTuple,

    #[error("malformed range `{0}`; expected `A..B` with A <= B")]
    BadRange(String),

    #[error("unknown filter `{0}`")]
    UnknownFilter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 for usage-level problems, 1 for
    /// domain rejections on well-formed input.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::ExcludedPair { .. }
            | Error::EnumerationBudget { .. }
            | Error::LinesCase
            | Error::MarkedPointsUnsupported => 1,
            _ => 2,
        }
    }
}
