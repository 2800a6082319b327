use thiserror::Error;

/// Errors raised by the library. Every variant corresponds to one violated
/// precondition; `name()` gives the stable identifier printed by the CLI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    Dimension(String),
    #[error("negative probability mass {value} at index {index}")]
    NegativeMass { index: usize, value: f64 },
    #[error("probabilities sum to {sum}, not 1")]
    NotNormalized { sum: f64 },
    #[error("row {row} has zero marginal probability")]
    ZeroMarginal { row: usize },
    #[error("escort of order {alpha} is undefined for a distribution with zero entries")]
    EscortUndefined { alpha: f64 },
    #[error("element {x} has no inverse under the deformation lambda = {lambda}")]
    SingularElement { lambda: f64, x: f64 },
    #[error("overflow evaluating {0}")]
    Overflow(String),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "DimensionError",
            Error::NegativeMass { .. } => "NegativeMass",
            Error::NotNormalized { .. } => "NotNormalized",
            Error::ZeroMarginal { .. } => "ZeroMarginal",
            Error::EscortUndefined { .. } => "EscortUndefined",
            Error::SingularElement { .. } => "SingularElement",
            Error::Overflow(_) => "Overflow",
            Error::Domain(_) => "DomainError",
            Error::Parameter(_) => "ParameterError",
            Error::Config(_) => "ConfigError",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
