use thiserror::Error;

use crate::duality::DualityError;
use crate::frame_pair::FramePairError;
use crate::io::FormatError;
use crate::lattice::LatticeError;
use crate::realline::RealLineError;
use crate::space::SpaceError;
use crate::spectrum::SpectrumError;
use crate::topology::TopologyError;

/// A configured enumeration bound was exceeded.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what}: size {size} exceeds the configured bound {limit}")]
pub struct LimitError {
    pub what: &'static str,
    pub size: usize,
    pub limit: usize,
}

impl LimitError {
    pub(crate) fn check(what: &'static str, size: usize, limit: usize) -> Result<(), LimitError> {
        if size > limit {
            Err(LimitError { what, size, limit })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    FramePair(#[from] FramePairError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Duality(#[from] DualityError),
    #[error(transparent)]
    RealLine(#[from] RealLineError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Limit(#[from] LimitError),
}
