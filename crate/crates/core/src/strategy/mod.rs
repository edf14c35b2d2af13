//! Strategy sequences and their keyed generation.
//!
//! A strategy of width `P` is a sequence over `0..P`; DI₃ needs one of
//! length `λ > P` whose last `P` terms are pairwise distinct, so every message
//! position gets written during the final `P` iterations.

mod bbs;
mod stream;

use std::collections::BTreeSet;

pub use bbs::{bbs_next_bit, BbsParams, BbsState};
pub use stream::{shuffle, uniform_below, BitSource, Generator, KeyStream, StegoKey};

use crate::{Error, Result};

/// A validated DI₃ strategy: terms in `0..width`, length above `width`,
/// injective tail.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Strategy {
    terms: Vec<usize>,
    width: usize,
}

impl Strategy {
    pub fn new(terms: Vec<usize>, width: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::ZeroWidth);
        }
        if terms.len() <= width {
            return Err(Error::StrategyLength {
                lambda: terms.len(),
                width,
            });
        }
        classify_sequence(&terms, width)?;
        let tail = &terms[terms.len() - width..];
        if !classify_sequence(tail, width)?.injective {
            return Err(Error::TailNotInjective { width });
        }
        Ok(Strategy { terms, width })
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    /// Message width `P`.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of iterations `λ`.
    pub fn lambda(&self) -> usize {
        self.terms.len()
    }

    /// The final `P` terms.
    pub fn tail(&self) -> &[usize] {
        &self.terms[self.terms.len() - self.width..]
    }
}

/// Distinct values of a finite sequence.
pub fn sequence_support(s: &[usize]) -> BTreeSet<usize> {
    s.iter().copied().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceClass {
    pub injective: bool,
    pub onto: bool,
    pub bijective: bool,
}

/// Injective, onto and bijective predicates for a sequence over `0..range`.
pub fn classify_sequence(s: &[usize], range: usize) -> Result<SequenceClass> {
    if let Some((position, &term)) = s.iter().enumerate().find(|(_, &t)| t >= range) {
        return Err(Error::TermOutOfRange {
            position,
            term,
            width: range,
        });
    }
    let support = sequence_support(s).len();
    let injective = s.len() == support;
    let onto = range == support;
    Ok(SequenceClass {
        injective,
        onto,
        bijective: injective && onto,
    })
}

/// Draws a strategy of width `width` and length `lambda` from the key.
///
/// The first `lambda - width` terms are i.i.d. uniform over `0..width`
/// (rejection sampled), the tail is a uniform permutation of `0..width`.
pub fn generate_strategy(key: &StegoKey, width: usize, lambda: usize) -> Result<Strategy> {
    if width == 0 {
        return Err(Error::ZeroWidth);
    }
    if lambda <= width {
        return Err(Error::StrategyLength { lambda, width });
    }
    let mut stream = key.stream(b"strategy", &[])?;
    let mut terms: Vec<usize> = (0..lambda - width)
        .map(|_| uniform_below(&mut stream, width))
        .collect();
    let mut tail: Vec<usize> = (0..width).collect();
    shuffle(&mut stream, &mut tail);
    terms.extend(tail);
    Strategy::new(terms, width)
}
