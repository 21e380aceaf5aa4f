//! Error type for word arithmetic and the symbolic extension.

use crossed_core::CrossedError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StdExtError {
    #[error(transparent)]
    Crossed(#[from] CrossedError),
    #[error("letter uses the identity of π₀")]
    IdentityLetter,
    #[error("letter exponent {exponent} is not ±1")]
    BadExponent { exponent: i8 },
    #[error("letter {letter} is outside π₀ of order {order}")]
    LetterOutOfRange { letter: usize, order: usize },
    #[error("word maps to {image} under π, not to the identity")]
    NotInKernel { image: usize },
    #[error("module element belongs to different coefficients")]
    CoefficientMismatch,
    #[error("3-cocycle lives over different homotopy data than the module")]
    ModuleMismatch,
}
