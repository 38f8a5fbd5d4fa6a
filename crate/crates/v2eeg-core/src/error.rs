//! Error type shared by the core modules.

use alloc::string::String;
use core::fmt;

/// Errors produced by core computations.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// Tensor/matrix shapes do not agree for the requested operation.
    ShapeMismatch { op: &'static str, detail: String },
    /// An argument violates an operation precondition.
    InvalidParameter { op: &'static str, detail: String },
    /// A NaN or infinity appeared where a finite value is required.
    NonFinite { context: String },
    /// An API contract was violated (e.g. backward on a non-scalar).
    Contract { detail: String },
}

impl CoreError {
    pub fn shape(op: &'static str, detail: impl Into<String>) -> Self {
        CoreError::ShapeMismatch {
            op,
            detail: detail.into(),
        }
    }

    pub fn param(op: &'static str, detail: impl Into<String>) -> Self {
        CoreError::InvalidParameter {
            op,
            detail: detail.into(),
        }
    }

    pub fn non_finite(context: impl Into<String>) -> Self {
        CoreError::NonFinite {
            context: context.into(),
        }
    }

    pub fn contract(detail: impl Into<String>) -> Self {
        CoreError::Contract {
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::ShapeMismatch { op, detail } => {
                write!(f, "shape mismatch in {op}: {detail}")
            }
            CoreError::InvalidParameter { op, detail } => {
                write!(f, "invalid parameter for {op}: {detail}")
            }
            CoreError::NonFinite { context } => write!(f, "non-finite value in {context}"),
            CoreError::Contract { detail } => write!(f, "contract violation: {detail}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CoreError {}
