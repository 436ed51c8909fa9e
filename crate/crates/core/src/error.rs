//! Crate-wide error type.
//!
//! Every fallible operation returns [`Error`]. The variant name is stable and
//! is what the CLI reports (and maps to its exit codes), so renaming a variant
//! is a breaking change.

use thiserror::Error;

/// Errors raised by the disentropy library.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument lies outside the real domain of the requested function
    /// (below a branch point, wrong branch, zero probability where a
    /// logarithm is taken, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Logarithm base must be positive and different from 1.
    #[error("invalid base: {0}")]
    InvalidBase(f64),

    /// Kaniadakis deformation requires kappa^2 < 1.
    #[error("invalid kappa: {0}")]
    InvalidKappa(f64),

    /// No real principal branch exists for this Tsallis index.
    #[error("unsupported q = {q}: {reason}")]
    UnsupportedQ { q: f64, reason: String },

    /// Normalization over a single-point support is degenerate.
    #[error("degenerate support: {0}")]
    DegenerateSupport(String),

    /// Empirical statistics of an empty sequence.
    #[error("empty sequence")]
    EmptySequence,

    /// Integer argument outside the accepted range.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Matrix deformed exponential requires 1/(1-q) to be an integer.
    #[error("1/(1-q) is not an integer for q = {0}")]
    NonIntegerR(f64),

    /// One or more eigenvalues fall outside the domain of the spectral map.
    #[error("eigenvalue domain error: offending eigenvalues {0:?}")]
    EigenDomain(Vec<f64>),

    /// Gate construction requires an involutory (g^2 = I) matrix.
    #[error("matrix is not involutory")]
    NotInvolutory,

    /// Series truncation cannot reach the requested tail mass.
    #[error("truncation error: {0}")]
    Truncation(String),

    /// The requested exponent would produce complex values on a signed field.
    #[error("complex risk: {0}")]
    ComplexRisk(String),

    /// Image has fewer than two distinct pixel values.
    #[error("degenerate image: {0}")]
    DegenerateImage(String),

    /// A threshold class carries no weight.
    #[error("empty class at threshold {0}")]
    EmptyClass(u16),

    /// Probability vector violates nonnegativity or normalization.
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// Matrix fails a structural invariant (hermiticity, trace, dimensions).
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    /// Malformed PGM data.
    #[error("format error at byte {offset}: {what}")]
    Format { offset: usize, what: String },

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable short name of the error kind, used in CLI output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DomainError",
            Error::InvalidBase(_) => "InvalidBase",
            Error::InvalidKappa(_) => "InvalidKappa",
            Error::UnsupportedQ { .. } => "UnsupportedQ",
            Error::DegenerateSupport(_) => "DegenerateSupport",
            Error::EmptySequence => "EmptySequence",
            Error::OutOfRange(_) => "OutOfRange",
            Error::NonIntegerR(_) => "NonIntegerR",
            Error::EigenDomain(_) => "EigenDomainError",
            Error::NotInvolutory => "NotInvolutory",
            Error::Truncation(_) => "TruncationError",
            Error::ComplexRisk(_) => "ComplexRisk",
            Error::DegenerateImage(_) => "DegenerateImage",
            Error::EmptyClass(_) => "EmptyClass",
            Error::InvalidDistribution(_) => "InvalidDistribution",
            Error::InvalidMatrix(_) => "InvalidMatrix",
            Error::Format { .. } => "FormatError",
            Error::Io(_) => "IoError",
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
