use alloc::string::String;
use core::fmt;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument is outside the documented range (bad angle, `n < 2`, ...).
    InvalidArgument(String),
    /// A mathematical precondition of the operation does not hold
    /// (nonzero mass, asymmetric measure, constant transform, ...).
    PreconditionViolation(String),
    /// A semigroup was evaluated outside its declared sector.
    DomainViolation(String),
    /// `A + zI` is singular or too ill-conditioned to invert.
    SingularResolvent { condition_estimate: f64 },
    /// An iterative method did not reach its tolerance.
    NumericFailure { reason: String, best_estimate: Option<f64> },
    /// Convolution of two contour components.
    UnsupportedCombination(String),
    /// The requested operation does not apply to this semigroup model.
    UnsupportedModel(String),
    /// A Jordan certificate could not be built.
    ConstructionFailure(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionViolation(msg.into())
    }

    pub(crate) fn numeric(msg: impl Into<String>, best_estimate: Option<f64>) -> Self {
        Error::NumericFailure { reason: msg.into(), best_estimate }
    }

    /// True for failures of numerical methods as opposed to bad input.
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::NumericFailure { .. } | Error::SingularResolvent { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(m) => write!(f, "invalid argument: {m}"),
            Error::PreconditionViolation(m) => write!(f, "precondition violated: {m}"),
            Error::DomainViolation(m) => write!(f, "domain violation: {m}"),
            Error::SingularResolvent { condition_estimate } => {
                write!(f, "singular resolvent (condition estimate {condition_estimate:e})")
            }
            Error::NumericFailure { reason, best_estimate: Some(b) } => {
                write!(f, "numeric failure: {reason} (best estimate {b:e})")
            }
            Error::NumericFailure { reason, best_estimate: None } => {
                write!(f, "numeric failure: {reason}")
            }
            Error::UnsupportedCombination(m) => write!(f, "unsupported combination: {m}"),
            Error::UnsupportedModel(m) => write!(f, "unsupported model: {m}"),
            Error::ConstructionFailure(m) => write!(f, "construction failure: {m}"),
        }
    }
}

impl core::error::Error for Error {}
