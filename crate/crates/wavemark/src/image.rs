//! The in-memory RGB image model and a bit-exact netpbm codec.
//!
//! Reads PPM in both binary (P6) and ASCII (P3) form, maxval 255 only,
//! with `#` comments permitted in the header. The writer emits a single
//! canonical byte form (`P6\n<w> <h>\n255\n` + raster) so outputs are
//! stable byte for byte. A P5 writer is included for binary masks.

use crate::error::{Error, Result};

/// A color image as three separate row-major byte planes.
///
/// All three planes hold exactly `width * height` samples. Odd dimensions
/// are representable (the codec allows them); the authentication pipeline
/// rejects them at entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RgbImage {
    pub width: usize,
    pub height: usize,
    pub red: Vec<u8>,
    pub green: Vec<u8>,
    pub blue: Vec<u8>,
}

impl RgbImage {
    /// Builds an image from three planes, checking plane lengths.
    pub fn new(
        width: usize,
        height: usize,
        red: Vec<u8>,
        green: Vec<u8>,
        blue: Vec<u8>,
    ) -> Result<Self> {
        let expected = width
            .checked_mul(height)
            .ok_or_else(|| Error::DimensionMismatch("width * height overflows".into()))?;
        for (name, plane) in [("red", &red), ("green", &green), ("blue", &blue)] {
            if plane.len() != expected {
                return Err(Error::DimensionMismatch(format!(
                    "{name} plane has {} samples, {width}x{height} needs {expected}",
                    plane.len()
                )));
            }
        }
        Ok(Self { width, height, red, green, blue })
    }

    pub fn pixel_count(&self) -> usize {
        self.width * self.height
    }

    /// Pipeline entry check: both dimensions even and at least 2.
    pub fn require_even(&self) -> Result<()> {
        if self.width < 2 || self.height < 2 || self.width % 2 != 0 || self.height % 2 != 0 {
            return Err(Error::OddDimensions { width: self.width, height: self.height });
        }
        Ok(())
    }
}

/// PPM encoding variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PpmFormat {
    /// Binary raster ("P6").
    Binary,
    /// ASCII decimal raster ("P3").
    Ascii,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        Self { bytes, pos: 0 }
    }

    /// Skips whitespace and `#` comments (to end of line).
    fn skip_filler(&mut self) {
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

    /// Next whitespace-delimited token, skipping comments.
    fn token(&mut self) -> Option<&'a [u8]> {
        self.skip_filler();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && !self.bytes[self.pos].is_ascii_whitespace()
            && self.bytes[self.pos] != b'#'
        {
            self.pos += 1;
        }
        if self.pos > start {
            Some(&self.bytes[start..self.pos])
        } else {
            None
        }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let tok = self
            .token()
            .ok_or_else(|| Error::MalformedHeader(format!("missing {what}")))?;
        let text = std::str::from_utf8(tok)
            .map_err(|_| Error::MalformedHeader(format!("non-ASCII {what}")))?;
        text.parse::<usize>()
            .map_err(|_| Error::MalformedHeader(format!("invalid {what}: {text:?}")))
    }
}

/// Parses a PPM byte stream (P6 or P3, maxval 255) into planar form.
pub fn read_ppm(bytes: &[u8]) -> Result<RgbImage> {
    let mut cur = Cursor::new(bytes);
    let magic = cur
        .token()
        .ok_or_else(|| Error::MalformedHeader("empty input".into()))?;
    let binary = match magic {
        b"P6" => true,
        b"P3" => false,
        other => {
            return Err(Error::UnsupportedFormat(format!(
                "magic {:?}, expected P6 or P3",
                String::from_utf8_lossy(other)
            )))
        }
    };
    let width = cur.number("width")?;
    let height = cur.number("height")?;
    if width == 0 || height == 0 {
        return Err(Error::MalformedHeader(format!("zero dimension {width}x{height}")));
    }
    let maxval = cur.number("maxval")?;
    if maxval != 255 {
        return Err(Error::UnsupportedFormat(format!("maxval {maxval}, expected 255")));
    }
    let sample_count = width
        .checked_mul(height)
        .and_then(|n| n.checked_mul(3))
        .ok_or_else(|| Error::MalformedHeader("dimensions overflow".into()))?;

    let samples = if binary {
        // Exactly one whitespace byte separates the maxval from the raster.
        if cur.pos >= bytes.len() || !bytes[cur.pos].is_ascii_whitespace() {
            return Err(Error::MalformedHeader("missing raster separator".into()));
        }
        let start = cur.pos + 1;
        let found = bytes.len().saturating_sub(start);
        if found < sample_count {
            return Err(Error::Truncated { expected: sample_count, found });
        }
        bytes[start..start + sample_count].to_vec()
    } else {
        let mut samples = Vec::with_capacity(sample_count);
        for index in 0..sample_count {
            match cur.token() {
                None => return Err(Error::Truncated { expected: sample_count, found: index }),
                Some(tok) => {
                    let text = std::str::from_utf8(tok)
                        .map_err(|_| Error::MalformedHeader("non-ASCII raster sample".into()))?;
                    let value: u32 = text.parse().map_err(|_| {
                        Error::MalformedHeader(format!("invalid raster sample {text:?}"))
                    })?;
                    if value > 255 {
                        return Err(Error::RangeViolation { index, value: value as i64 });
                    }
                    samples.push(value as u8);
                }
            }
        }
        samples
    };

    let pixels = width * height;
    let mut red = Vec::with_capacity(pixels);
    let mut green = Vec::with_capacity(pixels);
    let mut blue = Vec::with_capacity(pixels);
    for px in samples.chunks_exact(3) {
        red.push(px[0]);
        green.push(px[1]);
        blue.push(px[2]);
    }
    RgbImage::new(width, height, red, green, blue)
}

/// Serializes an image in the canonical header form, interleaved RGB.
pub fn write_ppm(img: &RgbImage, format: PpmFormat) -> Vec<u8> {
    let magic = match format {
        PpmFormat::Binary => "P6",
        PpmFormat::Ascii => "P3",
    };
    let mut out = format!("{magic}\n{} {}\n255\n", img.width, img.height).into_bytes();
    match format {
        PpmFormat::Binary => {
            out.reserve(img.pixel_count() * 3);
            for i in 0..img.pixel_count() {
                out.push(img.red[i]);
                out.push(img.green[i]);
                out.push(img.blue[i]);
            }
        }
        PpmFormat::Ascii => {
            for i in 0..img.pixel_count() {
                out.extend_from_slice(
                    format!("{} {} {}\n", img.red[i], img.green[i], img.blue[i]).as_bytes(),
                );
            }
        }
    }
    out
}

/// Serializes a grayscale plane as binary PGM (P5), maxval 255.
///
/// `samples` must hold exactly `width * height` bytes.
pub fn write_pgm(width: usize, height: usize, samples: &[u8]) -> Vec<u8> {
    assert_eq!(samples.len(), width * height, "PGM plane length mismatch");
    let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
    out.extend_from_slice(samples);
    out
}
