//! Crate-wide error type.
//!
//! Every fallible operation returns [`Result`]. Variants are deliberately
//! coarse: they name the contract that was violated, and carry just enough
//! context to point at the offending argument or simulation step.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// Mismatched dimensions between interacting objects (measure vs test
    /// function, measure vs measure, projection length vs basis size, ...).
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    Dimension {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// Total mass fell at or below the degeneracy floor, so normalization
    /// would amplify round-off into garbage.
    #[error("weight degeneracy: total mass {mass:.3e} at or below floor {floor:.3e}")]
    WeightDegeneracy { mass: f64, floor: f64 },

    /// A scalar argument was outside its admissible range.
    #[error("invalid parameter {name}: {reason}")]
    Parameter { name: &'static str, reason: String },

    /// A coefficient function returned a non-finite value.
    #[error("coefficient {which} non-finite at t={t:.6}: {detail}")]
    Coefficient {
        which: &'static str,
        t: f64,
        detail: String,
    },

    /// A particle state or weight left the representable range mid-run.
    #[error("numerical blow-up at step {step}: {detail}")]
    NumericalBlowup { step: usize, detail: String },

    /// Two time grids that must agree do not.
    #[error("grid mismatch: {detail}")]
    Grid { detail: String },

    /// A reference computation failed to converge or was asked for more than
    /// it supports.
    #[error("oracle failure: {detail}")]
    Oracle { detail: String },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn dim(context: &'static str, expected: usize, got: usize) -> Self {
        Error::Dimension {
            context,
            expected,
            got,
        }
    }

    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::Parameter {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn oracle(detail: impl Into<String>) -> Self {
        Error::Oracle {
            detail: detail.into(),
        }
    }

    pub(crate) fn grid(detail: impl Into<String>) -> Self {
        Error::Grid {
            detail: detail.into(),
        }
    }
}
