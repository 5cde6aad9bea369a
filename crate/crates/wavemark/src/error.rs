//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the codec, the transforms and the pipelines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Magic number or maxval outside what the codec supports.
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("malformed header: {0}")]
    MalformedHeader(String),

    /// Fewer raster samples than the header promises.
    #[error("truncated raster: expected {expected} samples, found {found}")]
    Truncated { expected: usize, found: usize },

    /// The authentication pipeline requires even dimensions of at least 2x2.
    #[error("{width}x{height} image: the pipeline requires even dimensions (at least 2x2)")]
    OddDimensions { width: usize, height: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Payload must fill the blue plane exactly, two pixels per byte.
    #[error("capacity mismatch: {payload_len}-byte payload needs {} pixels, blue plane has {plane_len}", payload_len * 2)]
    CapacityMismatch { plane_len: usize, payload_len: usize },

    /// Extraction reads two pixels per payload byte.
    #[error("plane length {0} is odd; two pixels carry each payload byte")]
    OddPlaneLength(usize),

    /// A digest sample fell outside the byte range the payload requires.
    #[error("sample {value} at index {index} is outside [0, 255]")]
    RangeViolation { index: usize, value: i64 },

    /// A reconstructed sample fell outside the byte range.
    #[error("reconstructed sample {value} at index {index} is outside [0, 255]")]
    SampleOutOfRange { index: usize, value: i64 },

    /// Fidelity is undefined against an all-zero reference image.
    #[error("reference image is all zero")]
    ZeroReference,

    /// The embedding key parameter is restricted to [2, 7].
    #[error("key must be in [2, 7], got {0}")]
    KeyOutOfRange(u8),
}
