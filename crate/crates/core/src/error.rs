use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("slope {0} is the slope of a bounding line; its image would be vertical")]
    VerticalImage(String),
    #[error("hourglass at index {0} passed to the bowtie-only algorithm")]
    HourglassInput(usize),
    #[error("arrangement was not built from the bounding lines of these wedges")]
    ArrangementMismatch,
    #[error("construction failed validation: {0}")]
    Validation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
