//! Crate-wide error type.

use std::fmt;

use crate::optimizer::Trajectory;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the attack laboratory.
#[derive(Debug)]
pub enum Error {
    /// A precondition on an argument was violated.
    InvalidArgument(String),
    /// Two images were expected to share (height, width, channels).
    ShapeMismatch {
        expected: (usize, usize, usize),
        actual: (usize, usize, usize),
    },
    /// Two feature vectors were expected to share a length.
    LengthMismatch { expected: usize, actual: usize },
    /// A corpus entry references a token outside the model vocabulary.
    VocabMismatch { vocab_size: usize, token: usize },
    /// No category keyword matched the instruction text.
    NoCategoryMatch { text: String },
    /// A prompt template contains a deny-listed token.
    DeniedToken { token: String },
    /// The external image provider is not configured or not reachable.
    ProviderUnavailable(String),
    /// An optimization run hit a non-finite loss; the partial trajectory
    /// covers every iteration before the failure.
    AbortedRun {
        iteration: usize,
        partial: Box<Trajectory>,
    },
    /// Malformed file content (config, trajectory export, image header).
    Format(String),
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::ShapeMismatch { expected, actual } => write!(
                f,
                "shape mismatch: expected {}x{}x{}, got {}x{}x{}",
                expected.0, expected.1, expected.2, actual.0, actual.1, actual.2
            ),
            Error::LengthMismatch { expected, actual } => {
                write!(f, "length mismatch: expected {expected}, got {actual}")
            }
            Error::VocabMismatch { vocab_size, token } => {
                write!(f, "token {token} outside vocabulary of size {vocab_size}")
            }
            Error::NoCategoryMatch { text } => {
                write!(f, "no scenario category matches instruction text {text:?}")
            }
            Error::DeniedToken { token } => {
                write!(f, "prompt template contains deny-listed token {token:?}")
            }
            Error::ProviderUnavailable(msg) => write!(f, "image provider unavailable: {msg}"),
            Error::AbortedRun { iteration, .. } => {
                write!(f, "optimization aborted at iteration {iteration}: non-finite loss")
            }
            Error::Format(msg) => write!(f, "malformed input: {msg}"),
            Error::Io(err) => write!(f, "i/o error: {err}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err)
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
