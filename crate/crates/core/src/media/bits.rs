use super::{BitVector, Image};
use crate::{Error, Result};

#[inline]
fn locate(index: usize) -> (usize, u8) {
    (index / 8, 7 - (index % 8) as u8)
}

fn check_range(img: &Image, indices: &[usize]) -> Result<()> {
    let bit_length = img.bit_length();
    match indices.iter().find(|&&k| k >= bit_length) {
        Some(&index) => Err(Error::IndexOutOfRange { index, bit_length }),
        None => Ok(()),
    }
}

/// Reads the bits at `indices`, in the order given.
pub fn extract_bits(img: &Image, indices: &[usize]) -> Result<BitVector> {
    check_range(img, indices)?;
    let pixels = img.pixels();
    Ok(indices
        .iter()
        .map(|&k| {
            let (p, shift) = locate(k);
            (pixels[p] >> shift) & 1 == 1
        })
        .collect())
}

/// Returns a copy of `img` whose bits at `indices` are replaced by `bits`.
///
/// Fails rather than produce a pixel above the image's maxval.
pub fn write_bits(img: &Image, indices: &[usize], bits: &BitVector) -> Result<Image> {
    if indices.len() != bits.len() {
        return Err(Error::LengthMismatch {
            indices: indices.len(),
            bits: bits.len(),
        });
    }
    check_range(img, indices)?;
    let mut pixels = img.pixels().to_vec();
    for (&k, bit) in indices.iter().zip(bits.iter()) {
        let (p, shift) = locate(k);
        pixels[p] = (pixels[p] & !(1 << shift)) | (u8::from(bit) << shift);
    }
    let maxval = img.maxval();
    if let Some((index, &value)) = pixels.iter().enumerate().find(|(_, &v)| v > maxval) {
        return Err(Error::WriteExceedsMaxval {
            index,
            value: value.into(),
            maxval,
        });
    }
    Image::new(img.width(), img.height(), maxval, pixels)
}
