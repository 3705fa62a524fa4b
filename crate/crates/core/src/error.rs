//! Error type shared by the transform layers.

use std::fmt;

/// Errors raised by signal, transform and image operations.
#[derive(Debug, Clone, PartialEq)]
pub enum HaarError {
    /// A single-level transform needs an even number of samples.
    OddLength { len: usize },
    /// The operation is undefined on an empty input.
    EmptySignal,
    /// Two sequences that must pair up sample-for-sample have different lengths.
    LengthMismatch { left: usize, right: usize },
    /// A sample was NaN or infinite.
    NonFinite { index: usize },
    /// A decomposition needs at least one level.
    InvalidLevels { levels: usize },
    /// The signal length is not divisible by 2^levels with a nonempty remainder band.
    InsufficientLength { len: usize, levels: usize },
    /// A decomposition's band lengths do not form a valid dyadic ladder.
    MalformedTree { reason: String },
    /// A single-level 2-D transform needs even width and height.
    OddDimension { width: usize, height: usize },
    /// Two images that must pair up pixel-for-pixel have different dimensions.
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// The pixel buffer length does not match width x height.
    BadPixelCount {
        width: usize,
        height: usize,
        len: usize,
    },
    /// Images must have at least one row and one column.
    EmptyImage,
}

impl fmt::Display for HaarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HaarError::OddLength { len } => {
                write!(f, "signal length {len} is odd; an even length is required")
            }
            HaarError::EmptySignal => write!(f, "signal is empty"),
            HaarError::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            HaarError::NonFinite { index } => {
                write!(f, "non-finite sample at index {index}")
            }
            HaarError::InvalidLevels { levels } => {
                write!(f, "invalid level count {levels}; at least 1 is required")
            }
            HaarError::InsufficientLength { len, levels } => {
                write!(
                    f,
                    "signal length {len} cannot be decomposed over {levels} levels"
                )
            }
            HaarError::MalformedTree { reason } => write!(f, "malformed tree: {reason}"),
            HaarError::OddDimension { width, height } => {
                write!(f, "image dimensions {width}x{height} must both be even")
            }
            HaarError::DimensionMismatch { left, right } => {
                write!(
                    f,
                    "dimension mismatch: {}x{} vs {}x{}",
                    left.0, left.1, right.0, right.1
                )
            }
            HaarError::BadPixelCount { width, height, len } => {
                write!(
                    f,
                    "pixel buffer has {len} samples, expected {width}x{height} = {}",
                    width * height
                )
            }
            HaarError::EmptyImage => write!(f, "image must have positive width and height"),
        }
    }
}

impl std::error::Error for HaarError {}
