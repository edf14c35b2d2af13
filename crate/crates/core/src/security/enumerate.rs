use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::di3::iterate;
use crate::media::BitVector;
use crate::strategy::{generate_strategy, StegoKey, Strategy};
use crate::{Error, Result};

/// Upper bound on `N + P` for exhaustive enumeration.
pub const MAX_ENUMERATION_BITS: usize = 24;

/// Anything that maps (cover channel, message, strategy) to a stego channel.
pub trait Embedder: Sync {
    fn embed(&self, x0: BitVector, message: &BitVector, strategy: &Strategy) -> BitVector;
}

/// The real DI₃ iteration.
#[derive(Debug, Clone, Copy, Default)]
pub struct Di3Embedder;

impl Embedder for Di3Embedder {
    fn embed(&self, x0: BitVector, message: &BitVector, strategy: &Strategy) -> BitVector {
        iterate(x0, message, strategy)
    }
}

/// Exact count of every stego state over an enumerated input space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    n_bits: usize,
    /// Indexed by the state read as a word, bit `i` being channel position `i`.
    counts: Vec<u64>,
    total: u64,
}

impl DistributionTable {
    pub fn n_bits(&self) -> usize {
        self.n_bits
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn count(&self, state: &BitVector) -> u64 {
        self.counts[state.to_word() as usize]
    }

    pub fn probability(&self, state: &BitVector) -> Ratio<u128> {
        Ratio::new(u128::from(self.count(state)), u128::from(self.total))
    }

    /// `max |p(y) − 2^−N|` over all states, exactly.
    pub fn max_deviation(&self) -> Ratio<u128> {
        let states = 1u128 << self.n_bits;
        let total = u128::from(self.total);
        let worst = self
            .counts
            .iter()
            .map(|&c| (u128::from(c) * states).abs_diff(total))
            .max()
            .unwrap_or(0);
        Ratio::new(worst, total * states)
    }

    pub fn is_uniform(&self) -> bool {
        let first = self.counts[0];
        self.counts.iter().all(|&c| c == first)
    }

    pub fn report(&self) -> EnumerationReport {
        let dev = self.max_deviation();
        EnumerationReport {
            n_bits: self.n_bits,
            total: self.total,
            max_deviation_num: *dev.numer(),
            max_deviation_den: *dev.denom(),
            uniform: self.is_uniform(),
        }
    }
}

/// Serializable summary of an enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub n_bits: usize,
    pub total: u64,
    pub max_deviation_num: u128,
    pub max_deviation_den: u128,
    pub uniform: bool,
}

impl EnumerationReport {
    pub fn max_deviation(&self) -> Ratio<u128> {
        Ratio::new(self.max_deviation_num, self.max_deviation_den)
    }
}

fn check_bounds(n: usize, p: usize, strategies: &[Strategy]) -> Result<()> {
    if n == 0 || n > 16 || p == 0 || p > n || n + p > MAX_ENUMERATION_BITS {
        return Err(Error::EnumerationBounds { n, p });
    }
    if strategies.is_empty() {
        return Err(Error::NoStrategies);
    }
    if let Some(s) = strategies.iter().find(|s| s.width() != p) {
        return Err(Error::WidthMismatch {
            strategy: s.width(),
            message: p,
        });
    }
    Ok(())
}

/// Counts `embedder` outputs over every `x0 ∈ 𝔹^n`, `m ∈ 𝔹^p` and each strategy.
pub fn enumerate_with<E: Embedder>(
    embedder: &E,
    n: usize,
    p: usize,
    strategies: &[Strategy],
) -> Result<DistributionTable> {
    check_bounds(n, p, strategies)?;
    let messages: Vec<BitVector> = (0..1u64 << p).map(|w| BitVector::from_word(w, p)).collect();
    let count_cover = |mut counts: Vec<u64>, x: u64| -> Vec<u64> {
        let x0 = BitVector::from_word(x, n);
        for m in &messages {
            for s in strategies {
                let y = embedder.embed(x0.clone(), m, s);
                counts[y.to_word() as usize] += 1;
            }
        }
        counts
    };
    let zero = || vec![0u64; 1 << n];

    #[cfg(feature = "parallel")]
    let counts = {
        use rayon::prelude::*;
        (0..1u64 << n)
            .into_par_iter()
            .fold(zero, count_cover)
            .reduce(zero, |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            })
    };
    #[cfg(not(feature = "parallel"))]
    let counts = (0..1u64 << n).fold(zero(), count_cover);

    let total = counts.iter().sum();
    Ok(DistributionTable {
        n_bits: n,
        counts,
        total,
    })
}

/// Stego distribution of the DI₃ embedder.
pub fn enumerate_stego_distribution(
    n: usize,
    p: usize,
    strategies: &[Strategy],
) -> Result<DistributionTable> {
    enumerate_with(&Di3Embedder, n, p, strategies)
}

/// `count` valid strategies of width `p` with lengths in `p+1..=3p+1`,
/// each from its own derived key. Deterministic in `seed`.
pub fn sample_strategies(p: usize, count: usize, seed: u64) -> Result<Vec<Strategy>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let key = StegoKey::fast(rng.random::<[u8; 16]>().to_vec())?;
            let lambda = rng.random_range(p + 1..=3 * p + 1);
            generate_strategy(&key, p, lambda)
        })
        .collect()
}

pub fn check_stego_security_with<E: Embedder>(
    embedder: &E,
    n: usize,
    p: usize,
    strategies: &[Strategy],
) -> Result<EnumerationReport> {
    Ok(enumerate_with(embedder, n, p, strategies)?.report())
}

/// Exhaustive uniformity check of DI₃ with `strategy_samples` sampled strategies.
pub fn check_stego_security(
    n: usize,
    p: usize,
    strategy_samples: usize,
) -> Result<EnumerationReport> {
    if strategy_samples == 0 {
        return Err(Error::NoStrategies);
    }
    let strategies = sample_strategies(p, strategy_samples, ((n as u64) << 32) | p as u64)?;
    check_stego_security_with(&Di3Embedder, n, p, &strategies)
}
