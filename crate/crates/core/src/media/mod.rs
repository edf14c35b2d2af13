//! Grayscale carriers and their bit-level addressing.
//!
//! A pixel is always an 8-bit word. Global bit index `k` addresses pixel
//! `k / 8` and, inside it, the bit of weight `2^(7 - k % 8)`: index 0 of a
//! pixel is its most significant bit, matching a signification function
//! that gives the first bit of every byte the largest weight.

mod bits;
mod pgm;
mod significance;

use std::fmt;
use std::str::FromStr;

pub use bits::{extract_bits, write_bits};
pub use pgm::{parse_pgm, write_pgm, PgmFormat};
pub use significance::{partition, significance, CoefficientPartition, SignificationFunction};

use crate::{Error, Result};

/// Row-major grayscale raster.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Image {
    width: usize,
    height: usize,
    maxval: u8,
    pixels: Vec<u8>,
}

impl Image {
    pub fn new(width: usize, height: usize, maxval: u8, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidDimensions { width, height });
        }
        if maxval == 0 {
            return Err(Error::MaxvalOutOfRange(0));
        }
        let expected = width
            .checked_mul(height)
            .ok_or(Error::InvalidDimensions { width, height })?;
        if pixels.len() != expected {
            return Err(Error::PixelCountMismatch {
                expected,
                found: pixels.len(),
            });
        }
        if let Some((index, &value)) = pixels.iter().enumerate().find(|(_, &p)| p > maxval) {
            return Err(Error::PixelExceedsMaxval {
                index,
                value: value.into(),
                maxval,
            });
        }
        Ok(Image {
            width,
            height,
            maxval,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn maxval(&self) -> u8 {
        self.maxval
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }

    /// Number of addressable bits, `8 × width × height`.
    pub fn bit_length(&self) -> usize {
        self.pixels.len() * 8
    }

    /// Pixel at column `x`, row `y`.
    pub fn pixel(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    /// 256-bin gray-level histogram.
    pub fn histogram(&self) -> [u64; 256] {
        let mut hist = [0u64; 256];
        for &p in &self.pixels {
            hist[p as usize] += 1;
        }
        hist
    }
}

/// Ordered Boolean vector: cover channels, stego channels and messages.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BitVector(Vec<bool>);

impl BitVector {
    pub fn new() -> Self {
        BitVector(Vec::new())
    }

    pub fn zeros(len: usize) -> Self {
        BitVector(vec![false; len])
    }

    /// Unpacks bytes most significant bit first.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        bytes
            .iter()
            .flat_map(|&b| (0..8).map(move |i| (b >> (7 - i)) & 1 == 1))
            .collect()
    }

    /// The low `len` bits of `word`, bit `i` of the vector being bit `i` of the word.
    pub fn from_word(word: u64, len: usize) -> Self {
        (0..len).map(|i| (word >> i) & 1 == 1).collect()
    }

    /// Inverse of [`BitVector::from_word`]; panics beyond 64 bits.
    pub fn to_word(&self) -> u64 {
        assert!(self.0.len() <= 64, "bit vector wider than a word");
        self.0
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | (u64::from(b) << i))
    }

    /// Packs most significant bit first; a trailing partial byte is zero padded.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0
            .chunks(8)
            .map(|chunk| {
                chunk
                    .iter()
                    .enumerate()
                    .fold(0u8, |acc, (i, &b)| acc | (u8::from(b) << (7 - i)))
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        self.0.get(i).copied()
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        self.0[i] = bit;
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// Copy of the first `len` bits.
    pub fn prefix(&self, len: usize) -> BitVector {
        BitVector(self.0[..len].to_vec())
    }
}

impl std::ops::Index<usize> for BitVector {
    type Output = bool;

    fn index(&self, i: usize) -> &bool {
        &self.0[i]
    }
}

impl From<Vec<bool>> for BitVector {
    fn from(bits: Vec<bool>) -> Self {
        BitVector(bits)
    }
}

impl From<BitVector> for Vec<bool> {
    fn from(bits: BitVector) -> Self {
        bits.0
    }
}

impl FromIterator<bool> for BitVector {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        BitVector(iter.into_iter().collect())
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Parses a string of `0` and `1` characters.
impl FromStr for BitVector {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(format!("not a bit: {other:?}")),
            })
            .collect()
    }
}
