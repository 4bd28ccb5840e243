use thiserror::Error;

use crate::format::ParseError;
use crate::group::GroupError;
use crate::matrix::MatrixError;
use crate::ring::RingError;
use crate::schedule::{ContextError, RealisationError, ScheduleError, SigmaError};
use crate::whitehead::WhiteheadError;

/// Any failure surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Whitehead(#[from] WhiteheadError),
    #[error(transparent)]
    Schedule(#[from] ScheduleError),
    #[error(transparent)]
    Sigma(#[from] SigmaError),
    #[error(transparent)]
    Realisation(#[from] RealisationError),
    #[error(transparent)]
    Context(#[from] ContextError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
