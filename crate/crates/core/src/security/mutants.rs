//! Deliberately broken embedders, used to show that the enumeration check
//! can fail.

use super::Embedder;
use crate::di3::iterate;
use crate::media::BitVector;
use crate::strategy::Strategy;

/// Embeds correctly, then also copies `m[0]` into position 1 (mod N).
#[derive(Debug, Clone, Copy, Default)]
pub struct DoubleWrite;

impl Embedder for DoubleWrite {
    fn embed(&self, x0: BitVector, message: &BitVector, strategy: &Strategy) -> BitVector {
        let mut y = iterate(x0, message, strategy);
        let second = 1 % y.len();
        y.set(second, message[0]);
        y
    }
}

/// Embeds correctly, then overwrites the last channel position with the
/// parity of the strategy's final term.
///
/// Across an odd number of strategies that bit cannot be exactly balanced,
/// so the leak is always visible to exact enumeration.
#[derive(Debug, Clone, Copy, Default)]
pub struct StrategyLeak;

impl Embedder for StrategyLeak {
    fn embed(&self, x0: BitVector, message: &BitVector, strategy: &Strategy) -> BitVector {
        let mut y = iterate(x0, message, strategy);
        let last = y.len() - 1;
        let parity = strategy.terms().last().is_some_and(|t| t % 2 == 1);
        y.set(last, parity);
        y
    }
}
