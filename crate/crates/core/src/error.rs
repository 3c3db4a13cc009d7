use thiserror::Error;

use crate::coxplane::PlaneError;
use crate::ising::ChainError;
use crate::lie::LieError;
use crate::spectra::SpectraError;

/// Any failure raised by this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Plane(#[from] PlaneError),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
