use thiserror::Error;

use crate::grade::GradeError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different universes ({left} vs {right} elements)")]
    UniverseMismatch { left: usize, right: usize },
    #[error("element `{0}` is not in the universe")]
    ElementNotInUniverse(String),
    #[error("universe must be nonempty")]
    EmptyUniverse,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("mapping is not total: no image for `{0}`")]
    PartialMapping(String),
    #[error("element `{0}` is assigned more than one image")]
    AmbiguousMapping(String),
    #[error("instance is missing component `{0}`")]
    MissingComponent(&'static str),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("information system needs at least one attribute")]
    NoAttributes,
    #[error("duplicate attribute `{0}`")]
    DuplicateAttribute(String),
    #[error(transparent)]
    Grade(#[from] GradeError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
