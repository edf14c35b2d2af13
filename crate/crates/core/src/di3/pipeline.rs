use std::fmt;

use sha2::{Digest, Sha256};

use super::{di3_embed, di3_extract, EmbeddingInstance};
use crate::media::{
    extract_bits, partition, write_bits, BitVector, CoefficientPartition, Image,
    SignificationFunction,
};
use crate::security::{chi_square_uniformity, DEFAULT_ALPHA};
use crate::strategy::{generate_strategy, BitSource, StegoKey};
use crate::{Error, Result};

const RANDOMIZE_LABEL: &[u8] = b"lsc-randomize";

/// How the LSC channel of an image is selected.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelSpec {
    pub function: SignificationFunction,
    /// `m`: weights at or below this are LSCs.
    pub low: f64,
    /// `M`: weights at or above this are MSCs.
    pub high: f64,
}

impl Default for ChannelSpec {
    /// Lowest bit of every pixel.
    fn default() -> Self {
        ChannelSpec {
            function: SignificationFunction::bit_rank(),
            low: 1.0,
            high: 5.0,
        }
    }
}

impl ChannelSpec {
    pub fn partition(&self, img: &Image) -> Result<CoefficientPartition> {
        partition(&self.function, img.bit_length(), self.low, self.high)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbedOptions {
    /// Iteration count; `None` means `2P + 1`.
    pub lambda: Option<usize>,
    /// Overwrite the whole LSC channel with keyed noise before embedding.
    pub prerandomize: bool,
}

impl Default for EmbedOptions {
    fn default() -> Self {
        EmbedOptions {
            lambda: None,
            prerandomize: true,
        }
    }
}

/// Number of LSC bits available in `img`.
pub fn capacity(img: &Image, channel: &ChannelSpec) -> Result<usize> {
    Ok(channel.partition(img)?.lsc().len())
}

/// Digest of everything in `img` that LSC rewriting leaves alone, so the
/// noise differs between carriers but survives embedding.
fn carrier_nonce(img: &Image, part: &CoefficientPartition) -> [u8; 32] {
    let mut masked = img.pixels().to_vec();
    for &k in part.lsc() {
        masked[k / 8] &= !(1 << (7 - k % 8));
    }
    let mut h = Sha256::new();
    for dim in [img.width(), img.height(), usize::from(img.maxval())] {
        h.update((dim as u64).to_le_bytes());
    }
    h.update(&masked);
    h.finalize().into()
}

fn check_partition(img: &Image, part: &CoefficientPartition) -> Result<()> {
    if part.bit_length() != img.bit_length() {
        return Err(Error::PartitionMismatch {
            partition: part.bit_length(),
            image: img.bit_length(),
        });
    }
    Ok(())
}

fn random_channel(img: &Image, part: &CoefficientPartition, key: &StegoKey) -> Result<BitVector> {
    let mut stream = key.stream(RANDOMIZE_LABEL, &carrier_nonce(img, part))?;
    Ok((0..part.lsc().len()).map(|_| stream.next_bit()).collect())
}

/// Replaces every LSC bit with a keyed pseudorandom bit.
pub fn randomize_lscs(img: &Image, part: &CoefficientPartition, key: &StegoKey) -> Result<Image> {
    check_partition(img, part)?;
    if part.lsc().is_empty() {
        return Ok(img.clone());
    }
    let noise = random_channel(img, part, key)?;
    write_bits(img, part.lsc(), &noise)
}

/// Hides `message` in the LSC channel of `img`.
///
/// MSC and passive bits come out bit-identical. With `prerandomize` the
/// result equals embedding without it into `randomize_lscs(img)`.
pub fn embed_in_image(
    img: &Image,
    channel: &ChannelSpec,
    message: &[u8],
    key: &StegoKey,
    opts: EmbedOptions,
) -> Result<Image> {
    let part = channel.partition(img)?;
    let width = message.len() * 8;
    if width == 0 {
        return Err(Error::ZeroWidth);
    }
    let available = part.lsc().len();
    if width > available {
        return Err(Error::Capacity {
            needed: width,
            available,
        });
    }
    let lambda = opts.lambda.unwrap_or(2 * width + 1);
    let strategy = generate_strategy(key, width, lambda)?;
    let x0 = if opts.prerandomize {
        random_channel(img, &part, key)?
    } else {
        extract_bits(img, part.lsc())?
    };
    let inst = EmbeddingInstance::new(x0, BitVector::from_bytes(message), strategy)?;
    write_bits(img, part.lsc(), &di3_embed(&inst))
}

/// Reads `len_bytes` bytes from the start of the LSC channel.
pub fn extract_from_image(img: &Image, channel: &ChannelSpec, len_bytes: usize) -> Result<Vec<u8>> {
    let part = channel.partition(img)?;
    let width = len_bytes * 8;
    if width > part.lsc().len() {
        return Err(Error::Capacity {
            needed: width,
            available: part.lsc().len(),
        });
    }
    let y = extract_bits(img, &part.lsc()[..width])?;
    Ok(di3_extract(&y, width)?.to_bytes())
}

/// Non-fatal findings about an embedding request.
#[derive(Debug, Clone, PartialEq)]
pub enum EmbedWarning {
    /// The message uses more than half of the channel.
    NearCapacity { needed: usize, available: usize },
    /// The message bytes are far from uniform; it is probably not encrypted.
    NonUniformMessage { p_value: f64 },
}

impl fmt::Display for EmbedWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbedWarning::NearCapacity { needed, available } => write!(
                f,
                "message uses {needed} of {available} LSC bits; keep it well below the channel size"
            ),
            EmbedWarning::NonUniformMessage { p_value } => write!(
                f,
                "message bytes fail a uniformity check (p = {p_value:.3e}); encrypt before embedding"
            ),
        }
    }
}

/// p-value under which the message is reported as clearly non-uniform.
const GROSS_FAILURE: f64 = DEFAULT_ALPHA / 100.0;

pub fn embedding_warnings(message: &[u8], available_bits: usize) -> Vec<EmbedWarning> {
    let mut warnings = Vec::new();
    let needed = message.len() * 8;
    if needed * 2 > available_bits {
        warnings.push(EmbedWarning::NearCapacity {
            needed,
            available: available_bits,
        });
    }
    // Bytes when there are enough of them, nibbles for short messages.
    let report = if message.len() >= 5 * 256 {
        let values: Vec<usize> = message.iter().map(|&b| usize::from(b)).collect();
        chi_square_uniformity(&values, 256, DEFAULT_ALPHA).ok()
    } else {
        let values: Vec<usize> = message
            .iter()
            .flat_map(|&b| [usize::from(b >> 4), usize::from(b & 0x0f)])
            .collect();
        chi_square_uniformity(&values, 16, DEFAULT_ALPHA).ok()
    };
    if let Some(r) = report {
        if r.p_value < GROSS_FAILURE {
            warnings.push(EmbedWarning::NonUniformMessage { p_value: r.p_value });
        }
    }
    warnings
}
