//! Bit-exact PGM (P2 ASCII and P5 binary) reading and writing.
//!
//! Input may carry `#` comments anywhere whitespace is allowed in the header;
//! output is always the canonical form `P5\n<w> <h>\n<maxval>\n<bytes>` or
//! `P2\n<w> <h>\n<maxval>\n` followed by one text row per image row.

use super::Image;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgmFormat {
    /// P2
    Ascii,
    /// P5
    Binary,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_separators(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    /// Next decimal token, or `None` at end of input.
    fn number(&mut self, what: &str) -> Result<Option<u64>> {
        self.skip_separators();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.bytes.get(self.pos) {
                None => Ok(None),
                Some(&b) => Err(Error::Malformed(format!(
                    "unexpected byte 0x{b:02x} while reading {what}"
                ))),
            };
        }
        if let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_whitespace() && b != b'#' {
                return Err(Error::Malformed(format!(
                    "unexpected byte 0x{b:02x} after {what}"
                )));
            }
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        // Saturate so an absurd value still reports the most specific error.
        Ok(Some(digits.parse::<u64>().unwrap_or(u64::MAX)))
    }

    fn header_field(&mut self, what: &str) -> Result<u64> {
        self.number(what)?
            .ok_or_else(|| Error::Malformed(format!("truncated header: missing {what}")))
    }
}

/// Parses an ASCII (P2) or binary (P5) graymap.
pub fn parse_pgm(bytes: &[u8]) -> Result<Image> {
    let format = match bytes.get(..2) {
        Some(b"P2") => PgmFormat::Ascii,
        Some(b"P5") => PgmFormat::Binary,
        _ => return Err(Error::BadMagic),
    };
    if bytes
        .get(2)
        .is_some_and(|b| !b.is_ascii_whitespace() && *b != b'#')
    {
        return Err(Error::BadMagic);
    }
    let mut cur = Cursor { bytes, pos: 2 };
    let width = cur.header_field("width")?;
    let height = cur.header_field("height")?;
    let maxval = cur.header_field("maxval")?;

    let to_dim = |v: u64| usize::try_from(v).unwrap_or(usize::MAX);
    let (width, height) = (to_dim(width), to_dim(height));
    if width == 0 || height == 0 {
        return Err(Error::InvalidDimensions { width, height });
    }
    if !(1..=255).contains(&maxval) {
        return Err(Error::MaxvalOutOfRange(maxval));
    }
    let maxval = maxval as u8;
    let expected = width
        .checked_mul(height)
        .ok_or(Error::InvalidDimensions { width, height })?;

    let pixels = match format {
        PgmFormat::Binary => {
            // Exactly one whitespace byte separates maxval from the raster.
            match bytes.get(cur.pos) {
                Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
                _ => return Err(Error::Malformed("missing separator before raster".into())),
            }
            let raster = &bytes[cur.pos..];
            if raster.len() != expected {
                return Err(Error::PixelCountMismatch {
                    expected,
                    found: raster.len(),
                });
            }
            raster.to_vec()
        }
        PgmFormat::Ascii => {
            let mut pixels = Vec::with_capacity(expected);
            while let Some(value) = cur.number("sample")? {
                pixels.push(value);
            }
            if pixels.len() != expected {
                return Err(Error::PixelCountMismatch {
                    expected,
                    found: pixels.len(),
                });
            }
            pixels
                .into_iter()
                .enumerate()
                .map(|(index, v)| {
                    u8::try_from(v)
                        .ok()
                        .filter(|&p| p <= maxval)
                        .ok_or(Error::PixelExceedsMaxval {
                            index,
                            value: u32::try_from(v).unwrap_or(u32::MAX),
                            maxval,
                        })
                })
                .collect::<Result<Vec<u8>>>()?
        }
    };
    Image::new(width, height, maxval, pixels)
}

/// Canonical serialization; `parse_pgm(&write_pgm(img, f)) == img` for both formats.
pub fn write_pgm(img: &Image, format: PgmFormat) -> Vec<u8> {
    let header = |magic: &str| {
        format!(
            "{magic}\n{} {}\n{}\n",
            img.width(),
            img.height(),
            img.maxval()
        )
    };
    match format {
        PgmFormat::Binary => {
            let mut out = header("P5").into_bytes();
            out.extend_from_slice(img.pixels());
            out
        }
        PgmFormat::Ascii => {
            let mut out = header("P2");
            for row in img.pixels().chunks(img.width()) {
                let line: Vec<String> = row.iter().map(u8::to_string).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
            out.into_bytes()
        }
    }
}
