use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("cut line does not meet the interior of the polygon")]
    CutMissesInterior,
    #[error("cut line meets the boundary at a non-lattice point {0}")]
    NonLatticeCut(String),
    #[error("parallel rays")]
    ParallelRays,
    #[error("fan is not complete")]
    IncompleteFan,
    #[error("torsion in cokernel")]
    TorsionCokernel,
    #[error("cone list is not closed under faces: missing {0}")]
    NotClosedUnderFaces(String),
    #[error("map undefined: all components vanish after substitution")]
    MapUndefined,
    #[error("indeterminate image: point lies in the base locus")]
    IndeterminateImage,
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("polynomial error: {0}")]
    Polynomial(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
