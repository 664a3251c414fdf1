use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {0}{1}")]
    InvalidRootSystem(String, usize),
    #[error("unknown Lie type {0:?}")]
    UnknownType(String),
    #[error("weight {0} is not dominant integral")]
    NotDominant(String),
    #[error("zero vector has no coroot")]
    ZeroVector,
    #[error("signed permutation: {0}")]
    Permutation(String),
    #[error("unknown pair {0:?}")]
    UnknownPair(String),
    #[error("{family}: {constraint}")]
    Constraint { family: String, constraint: String },
    #[error("weight is not in the spherical semigroup: {0}")]
    NotSpherical(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("inadmissible multiplicity signature {0}")]
    Signature(String),
    #[error("structural error in {pair}: {detail}")]
    Structural { pair: String, detail: String },
    #[error("dimension mismatch in {pair} at {lambda}: {detail}")]
    Mismatch {
        pair: String,
        lambda: String,
        detail: String,
    },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn structural(pair: &str, detail: impl Into<String>) -> Self {
        Error::Structural {
            pair: pair.to_string(),
            detail: detail.into(),
        }
    }

    /// True for errors caused by caller input rather than engine state.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidRootSystem(..)
                | Error::UnknownType(_)
                | Error::NotDominant(_)
                | Error::UnknownPair(_)
                | Error::Constraint { .. }
                | Error::NotSpherical(_)
                | Error::Parse(_)
                | Error::Permutation(_)
        )
    }
}
