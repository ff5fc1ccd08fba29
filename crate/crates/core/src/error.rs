use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown generator family `{0}`")]
    UnknownFamily(String),

    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),

    #[error("label `{label}` is not a member of the {family} generator set")]
    LabelNotInSet { label: String, family: String },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("generator sets carry different labels")]
    LabelMismatch,

    #[error("invalid {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("covariance is not symmetric positive-definite")]
    NotPositiveDefinite,

    #[error("sub-vacuum state: symplectic eigenvalue {mu} < 1 violates the uncertainty bound")]
    SubVacuum { mu: f64 },

    #[error("malformed structure table: {0}")]
    MalformedTable(String),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, value: impl Into<f64>, reason: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value: value.into(),
            reason,
        }
    }
}
