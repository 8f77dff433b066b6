//! Error type shared by every module.

use thiserror::Error;

/// Failures reported by parameter validation, contour construction and the solvers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Both entries of the connection matrix vanish.
    #[error("parameters a and b must not both be zero")]
    ZeroParameters,
    /// The background amplitude must be positive and finite.
    #[error("background amplitude B must be positive, got {0}")]
    BadAmplitude(f64),
    /// A scalar argument is outside the domain of the requested function.
    #[error("{what}: argument {value} outside domain")]
    Domain { what: &'static str, value: f64 },
    /// A point coincides with a pole or branch cut.
    #[error("{0}")]
    Singular(&'static str),
    /// An arc of a contour has (numerically) zero length.
    #[error("arc `{0}` is degenerate")]
    DegenerateArc(String),
    /// The collocation matrix could not be solved to a usable accuracy.
    #[error("collocation system is singular or ill-conditioned (estimate {condition:e})")]
    IllConditioned { condition: f64 },
    /// A point handed to an off-contour evaluation lies on the contour.
    #[error("evaluation point lies on the jump contour")]
    OnContour,
    /// A regime-specific solver was called outside its admissible window.
    #[error("{0}")]
    Regime(String),
    /// A command-line argument violates its precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Text input could not be parsed.
    #[error("cannot parse `{0}`")]
    Parse(String),
    /// Failure while reading or writing data files.
    #[error("i/o: {0}")]
    Io(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
