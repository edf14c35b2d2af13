use sha2::{Digest, Sha256};

use super::bbs::{BbsParams, BbsState};
use crate::{Error, Result};

/// A source of pseudorandom bits.
pub trait BitSource {
    fn next_bit(&mut self) -> bool;

    /// `count` bits (at most 64) assembled most significant first.
    fn next_bits(&mut self, count: u32) -> u64 {
        debug_assert!(count <= 64);
        (0..count).fold(0u64, |acc, _| (acc << 1) | u64::from(self.next_bit()))
    }
}

/// Uniform draw from `0..bound` by rejection on `⌈log₂ bound⌉`-bit words.
///
/// Panics if `bound == 0`.
pub fn uniform_below<S: BitSource + ?Sized>(source: &mut S, bound: usize) -> usize {
    assert!(bound > 0, "empty range");
    if bound == 1 {
        return 0;
    }
    let bits = usize::BITS - (bound - 1).leading_zeros();
    loop {
        let v = source.next_bits(bits) as usize;
        if v < bound {
            return v;
        }
    }
}

/// Decreasing-range swap shuffle driven by `source`.
pub fn shuffle<S: BitSource + ?Sized, T>(source: &mut S, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = uniform_below(source, i + 1);
        items.swap(i, j);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// Blum-Blum-Shub. Slow; the default moduli are test scale only.
    Bbs(BbsParams),
    /// SHA-256 in counter mode.
    Fast,
}

/// Secret seed plus the generator that expands it.
#[derive(Clone, PartialEq, Eq)]
pub struct StegoKey {
    seed: Vec<u8>,
    generator: Generator,
}

impl std::fmt::Debug for StegoKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StegoKey")
            .field("seed", &format_args!("<{} bytes>", self.seed.len()))
            .field("generator", &self.generator)
            .finish()
    }
}

impl StegoKey {
    pub fn new(seed: Vec<u8>, generator: Generator) -> Result<Self> {
        if seed.is_empty() {
            return Err(Error::InvalidKey("empty seed".into()));
        }
        if let Generator::Bbs(params) = generator {
            params.validate()?;
        }
        Ok(StegoKey { seed, generator })
    }

    pub fn fast(seed: Vec<u8>) -> Result<Self> {
        Self::new(seed, Generator::Fast)
    }

    pub fn bbs(seed: Vec<u8>, params: BbsParams) -> Result<Self> {
        Self::new(seed, Generator::Bbs(params))
    }

    /// Parses a lowercase hex seed.
    pub fn from_hex(hex: &str, generator: Generator) -> Result<Self> {
        if hex.bytes().any(|b| b.is_ascii_uppercase()) {
            return Err(Error::InvalidKey("hex must be lowercase".into()));
        }
        let seed = hex::decode(hex).map_err(|e| Error::InvalidKey(e.to_string()))?;
        Self::new(seed, generator)
    }

    pub fn seed(&self) -> &[u8] {
        &self.seed
    }

    pub fn generator(&self) -> Generator {
        self.generator
    }

    /// Independent bit stream for one use of the key, separated by `label`
    /// and an optional per-carrier `nonce`.
    pub fn stream(&self, label: &[u8], nonce: &[u8]) -> Result<KeyStream> {
        let mut h = Sha256::new();
        h.update(b"di3-keystream");
        for part in [label, nonce, &self.seed] {
            h.update((part.len() as u64).to_le_bytes());
            h.update(part);
        }
        let material: [u8; 32] = h.finalize().into();
        Ok(match self.generator {
            Generator::Fast => KeyStream::Fast(FastStream::new(material)),
            Generator::Bbs(params) => KeyStream::Bbs(BbsState::seeded(params, &material)?),
        })
    }
}

/// SHA-256(material ‖ counter) blocks, consumed most significant bit first.
#[derive(Debug, Clone)]
pub struct FastStream {
    material: [u8; 32],
    counter: u64,
    block: [u8; 32],
    bit: usize,
}

impl FastStream {
    fn new(material: [u8; 32]) -> Self {
        FastStream {
            material,
            counter: 0,
            block: [0; 32],
            bit: 256,
        }
    }

    fn refill(&mut self) {
        let mut h = Sha256::new();
        h.update(self.material);
        h.update(self.counter.to_le_bytes());
        self.block = h.finalize().into();
        self.counter += 1;
        self.bit = 0;
    }
}

impl BitSource for FastStream {
    fn next_bit(&mut self) -> bool {
        if self.bit == 256 {
            self.refill();
        }
        let b = (self.block[self.bit / 8] >> (7 - self.bit % 8)) & 1 == 1;
        self.bit += 1;
        b
    }
}

#[derive(Debug, Clone)]
pub enum KeyStream {
    Fast(FastStream),
    Bbs(BbsState),
}

impl BitSource for KeyStream {
    fn next_bit(&mut self) -> bool {
        match self {
            KeyStream::Fast(s) => s.next_bit(),
            KeyStream::Bbs(s) => s.next_bit(),
        }
    }
}
