use crate::{Error, Result};

/// Periodic weight table: bit `k` has importance `weights[k % period]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignificationFunction {
    weights: Vec<f64>,
}

impl SignificationFunction {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptySignification);
        }
        if let Some(&w) = weights.iter().find(|w| !w.is_finite()) {
            return Err(Error::NonFiniteWeight(w));
        }
        Ok(SignificationFunction { weights })
    }

    /// `u(k) = 8 - (k mod 8)`: the first bit of each byte weighs 8, the last weighs 1.
    pub fn bit_rank() -> Self {
        SignificationFunction {
            weights: (0..8).map(|k| f64::from(8 - k)).collect(),
        }
    }

    pub fn period(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

impl Default for SignificationFunction {
    fn default() -> Self {
        Self::bit_rank()
    }
}

pub fn significance(f: &SignificationFunction, k: usize) -> f64 {
    f.weights[k % f.weights.len()]
}

/// MSC / LSC / passive split of the bit positions `0..bit_length`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientPartition {
    msc: Vec<usize>,
    lsc: Vec<usize>,
    passive: Vec<usize>,
    bit_length: usize,
}

impl CoefficientPartition {
    /// Positions whose weight is at least `M`.
    pub fn msc(&self) -> &[usize] {
        &self.msc
    }

    /// Positions whose weight is at most `m`.
    pub fn lsc(&self) -> &[usize] {
        &self.lsc
    }

    /// Positions strictly between the thresholds.
    pub fn passive(&self) -> &[usize] {
        &self.passive
    }

    pub fn bit_length(&self) -> usize {
        self.bit_length
    }
}

/// Splits `0..bit_length` by comparing each weight against `low < high`.
pub fn partition(
    f: &SignificationFunction,
    bit_length: usize,
    low: f64,
    high: f64,
) -> Result<CoefficientPartition> {
    if low.partial_cmp(&high) != Some(std::cmp::Ordering::Less) {
        return Err(Error::Threshold { low, high });
    }
    let mut msc = Vec::new();
    let mut lsc = Vec::new();
    let mut passive = Vec::new();
    for k in 0..bit_length {
        let u = significance(f, k);
        if u >= high {
            msc.push(k);
        } else if u <= low {
            lsc.push(k);
        } else {
            passive.push(k);
        }
    }
    Ok(CoefficientPartition {
        msc,
        lsc,
        passive,
        bit_length,
    })
}
