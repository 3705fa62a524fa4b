//! Signal CSV: one value per line, UTF-8, LF line endings, `#` comments.
//!
//! Values are written with 17 significant digits (`{:.16e}`), which
//! round-trips every finite double bit-for-bit.

use std::fs;
use std::path::Path;

use crate::io::{open_readable, FormatError};
use crate::signal::Signal;

/// Reads one real number per line. Blank lines and lines starting with `#`
/// are skipped; decimal notation with an optional scientific exponent, dot
/// decimal separator.
pub fn read_signal_csv(path: &Path) -> Result<Signal, FormatError> {
    let bytes = open_readable(path)?;
    let text = String::from_utf8(bytes).map_err(|e| {
        let line = e.as_bytes()[..e.utf8_error().valid_up_to()]
            .iter()
            .filter(|b| **b == b'\n')
            .count()
            + 1;
        FormatError::Parse {
            line,
            content: "file is not valid UTF-8".into(),
        }
    })?;
    let mut samples = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let value: f64 = trimmed.parse().map_err(|_| FormatError::Parse {
            line,
            content: trimmed.to_string(),
        })?;
        if !value.is_finite() {
            return Err(FormatError::NonFinite { line });
        }
        samples.push(value);
    }
    Ok(Signal::new(samples).expect("parsed values are finite"))
}

fn format_sample(value: f64) -> String {
    format!("{value:.16e}")
}

/// Writes one value per line in the fixed 17-significant-digit format.
pub fn write_signal_csv(x: &Signal, path: &Path) -> Result<(), FormatError> {
    write_signal_csv_with_comments(x, path, &[])
}

/// Same as [`write_signal_csv`] with leading `#` comment lines; readers
/// skip them, so the value round-trip is unaffected.
pub fn write_signal_csv_with_comments(
    x: &Signal,
    path: &Path,
    comments: &[String],
) -> Result<(), FormatError> {
    let mut out = String::new();
    for comment in comments {
        out.push_str("# ");
        out.push_str(comment);
        out.push('\n');
    }
    for value in x.samples() {
        out.push_str(&format_sample(*value));
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}
