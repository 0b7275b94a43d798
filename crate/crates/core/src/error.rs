use thiserror::Error;

/// Errors raised by the algebra, series and family layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational {0:?}: expected \"p/q\" or an integer with q != 0")]
    ParseRational(String),

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("leading coefficient not a unit")]
    NotAUnit,

    #[error("coefficient index {index} exceeds series order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
