//! The DI₃ embedder.
//!
//! At iteration `n` the channel position `S^n` receives the message bit
//! `m[S^n]`; every other position carries over. The stego channel is the
//! state after `λ` iterations.
//!
//! Because the value written at a position depends only on that position,
//! and the injective tail visits every message position, the result is always
//! `m` on positions `0..P` and the cover elsewhere, whatever the strategy or
//! `λ`. [`substitution_oracle`] computes that closed form independently and
//! [`di3_extract`] relies on it. Placement therefore carries no secret:
//! confidentiality comes from encrypting the message before embedding.

mod pipeline;

pub use pipeline::{
    capacity, embed_in_image, embedding_warnings, extract_from_image, randomize_lscs, ChannelSpec,
    EmbedOptions, EmbedWarning,
};

use crate::media::BitVector;
use crate::strategy::Strategy;
use crate::{Error, Result};

/// Cover channel, message and strategy, checked for mutual consistency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingInstance {
    x0: BitVector,
    message: BitVector,
    strategy: Strategy,
}

impl EmbeddingInstance {
    pub fn new(x0: BitVector, message: BitVector, strategy: Strategy) -> Result<Self> {
        if message.len() != strategy.width() {
            return Err(Error::WidthMismatch {
                strategy: strategy.width(),
                message: message.len(),
            });
        }
        if message.len() > x0.len() {
            return Err(Error::Capacity {
                needed: message.len(),
                available: x0.len(),
            });
        }
        Ok(EmbeddingInstance {
            x0,
            message,
            strategy,
        })
    }

    pub fn cover(&self) -> &BitVector {
        &self.x0
    }

    pub fn message(&self) -> &BitVector {
        &self.message
    }

    pub fn strategy(&self) -> &Strategy {
        &self.strategy
    }
}

/// Runs the `λ` iterations and returns the final channel state.
pub fn di3_embed(inst: &EmbeddingInstance) -> BitVector {
    iterate(inst.x0.clone(), &inst.message, &inst.strategy)
}

/// The recurrence itself, on an owned channel. Callers guarantee the widths.
pub(crate) fn iterate(mut x: BitVector, message: &BitVector, strategy: &Strategy) -> BitVector {
    for &s in strategy.terms() {
        x.set(s, message[s]);
    }
    x
}

/// Closed form of the embedder: `m` on the first `P` positions, `x0` elsewhere.
pub fn substitution_oracle(x0: &BitVector, m: &BitVector) -> Result<BitVector> {
    if m.len() > x0.len() {
        return Err(Error::Capacity {
            needed: m.len(),
            available: x0.len(),
        });
    }
    Ok(m.iter().chain(x0.iter().skip(m.len())).collect())
}

/// Reads a `width`-bit message back from a stego channel.
pub fn di3_extract(y: &BitVector, width: usize) -> Result<BitVector> {
    if width > y.len() {
        return Err(Error::Capacity {
            needed: width,
            available: y.len(),
        });
    }
    Ok(y.prefix(width))
}
