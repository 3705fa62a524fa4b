//! File formats: signal CSV, PGM images, and SVG line plots.

pub mod csv;
pub mod pgm;
pub mod svg;

use std::fmt;
use std::io;
use std::path::PathBuf;

pub use csv::{read_signal_csv, write_signal_csv, write_signal_csv_with_comments};
pub use pgm::{read_pgm, write_pgm};
pub use svg::emit_svg_plot;

/// Errors raised while reading or writing files.
#[derive(Debug)]
pub enum FormatError {
    FileNotFound(PathBuf),
    Io(io::Error),
    /// Unparseable text at a 1-based line number.
    Parse { line: usize, content: String },
    /// A parsed value was NaN or infinite.
    NonFinite { line: usize },
    /// Recognized magic number, but a flavor this reader does not handle.
    UnsupportedFormat(String),
    MalformedHeader(String),
    /// The pixel payload ended early.
    TruncatedData { expected: usize, got: usize },
    /// A sample exceeded the header's declared maximum value.
    SampleOutOfRange { value: u32, maxval: u32 },
    /// A plot needs at least one non-empty series.
    EmptySeries,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::FileNotFound(path) => write!(f, "file not found: {}", path.display()),
            FormatError::Io(err) => write!(f, "i/o error: {err}"),
            FormatError::Parse { line, content } => {
                write!(f, "parse error at line {line}: '{content}'")
            }
            FormatError::NonFinite { line } => {
                write!(f, "non-finite value at line {line}")
            }
            FormatError::UnsupportedFormat(what) => write!(f, "unsupported format: {what}"),
            FormatError::MalformedHeader(what) => write!(f, "malformed header: {what}"),
            FormatError::TruncatedData { expected, got } => {
                write!(f, "truncated data: expected {expected} samples, got {got}")
            }
            FormatError::SampleOutOfRange { value, maxval } => {
                write!(f, "sample {value} exceeds declared maxval {maxval}")
            }
            FormatError::EmptySeries => write!(f, "plot needs at least one non-empty series"),
        }
    }
}

impl std::error::Error for FormatError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            FormatError::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<io::Error> for FormatError {
    fn from(err: io::Error) -> Self {
        FormatError::Io(err)
    }
}

pub(crate) fn open_readable(path: &std::path::Path) -> Result<Vec<u8>, FormatError> {
    std::fs::read(path).map_err(|err| {
        if err.kind() == io::ErrorKind::NotFound {
            FormatError::FileNotFound(path.to_path_buf())
        } else {
            FormatError::Io(err)
        }
    })
}
