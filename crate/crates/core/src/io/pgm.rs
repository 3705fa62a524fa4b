//! PGM image I/O: reads P2 (ASCII) and P5 (binary) with maxval up to 255,
//! writes P5 with maxval 255.

use std::fs;
use std::path::Path;

use crate::image2d::GrayImage;
use crate::io::{open_readable, FormatError};

struct HeaderReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> HeaderReader<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        Self { bytes, pos: 0 }
    }

    /// Skips whitespace and `#` comments (which run to end of line).
    fn skip_separators(&mut self) {
        while self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else {
                break;
            }
        }
    }

    fn next_token(&mut self) -> Result<&'a str, FormatError> {
        self.skip_separators();
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(FormatError::MalformedHeader("unexpected end of file".into()));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .map_err(|_| FormatError::MalformedHeader("non-ASCII header token".into()))
    }

    fn next_number(&mut self, what: &str) -> Result<u32, FormatError> {
        let token = self.next_token()?;
        token
            .parse()
            .map_err(|_| FormatError::MalformedHeader(format!("bad {what}: '{token}'")))
    }
}

/// Reads a P2 or P5 file into real-valued pixels equal to the stored
/// integers (no rescaling).
pub fn read_pgm(path: &Path) -> Result<GrayImage, FormatError> {
    let bytes = open_readable(path)?;
    if bytes.len() < 2 {
        return Err(FormatError::MalformedHeader("file too short".into()));
    }
    let magic = &bytes[..2];
    match magic {
        b"P2" | b"P5" => {}
        b"P1" | b"P3" | b"P4" | b"P6" | b"P7" => {
            return Err(FormatError::UnsupportedFormat(format!(
                "{} (only P2/P5 grayscale is supported)",
                String::from_utf8_lossy(magic)
            )));
        }
        _ => return Err(FormatError::MalformedHeader("missing PGM magic number".into())),
    }
    let binary = magic == b"P5";

    let mut header = HeaderReader::new(&bytes[2..]);
    let width = header.next_number("width")? as usize;
    let height = header.next_number("height")? as usize;
    let maxval = header.next_number("maxval")?;
    if width == 0 || height == 0 {
        return Err(FormatError::MalformedHeader(format!(
            "zero dimension {width}x{height}"
        )));
    }
    if maxval == 0 {
        return Err(FormatError::MalformedHeader("maxval is zero".into()));
    }
    if maxval > 255 {
        return Err(FormatError::UnsupportedFormat(format!(
            "maxval {maxval} (only up to 255 is supported)"
        )));
    }

    let expected = width * height;
    let pixels: Vec<f64> = if binary {
        // Exactly one whitespace byte separates the header from the payload.
        let data_start = 2 + header.pos + 1;
        if header.pos >= bytes.len() - 2 || !bytes[2 + header.pos].is_ascii_whitespace() {
            return Err(FormatError::MalformedHeader(
                "missing separator before pixel data".into(),
            ));
        }
        let data = &bytes[data_start.min(bytes.len())..];
        if data.len() < expected {
            return Err(FormatError::TruncatedData {
                expected,
                got: data.len(),
            });
        }
        for b in &data[..expected] {
            if u32::from(*b) > maxval {
                return Err(FormatError::SampleOutOfRange {
                    value: u32::from(*b),
                    maxval,
                });
            }
        }
        data[..expected].iter().map(|b| f64::from(*b)).collect()
    } else {
        let mut values = Vec::with_capacity(expected);
        while values.len() < expected {
            let token = match header.next_token() {
                Ok(t) => t,
                Err(_) => {
                    return Err(FormatError::TruncatedData {
                        expected,
                        got: values.len(),
                    })
                }
            };
            let value: u32 = token.parse().map_err(|_| {
                FormatError::MalformedHeader(format!("bad sample: '{token}'"))
            })?;
            if value > maxval {
                return Err(FormatError::SampleOutOfRange { value, maxval });
            }
            values.push(f64::from(value));
        }
        values
    };

    GrayImage::new(width, height, pixels)
        .map_err(|e| FormatError::MalformedHeader(e.to_string()))
}

/// Writes P5 with maxval 255. Pixels are rounded half away from zero, then
/// clamped to `[0, 255]`.
pub fn write_pgm(img: &GrayImage, path: &Path) -> Result<(), FormatError> {
    let mut out = Vec::with_capacity(32 + img.pixels().len());
    out.extend_from_slice(format!("P5\n{} {}\n255\n", img.width(), img.height()).as_bytes());
    for p in img.pixels() {
        out.push(p.round().clamp(0.0, 255.0) as u8);
    }
    fs::write(path, out)?;
    Ok(())
}
