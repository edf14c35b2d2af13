//! Frequency, runs and Pearson χ² tests in their usual NIST-style forms.

use statrs::function::erf::erfc;

use super::{chi_square_sf, TestReport};
use crate::media::BitVector;
use crate::{Error, Result};

const MIN_BITS: usize = 100;

fn require(size: usize, required: usize) -> Result<()> {
    if size < required {
        return Err(Error::SampleTooSmall { size, required });
    }
    Ok(())
}

/// `s = |#1 − #0| / √n`, `p = erfc(s / √2)`.
pub fn monobit_test(bits: &BitVector, alpha: f64) -> Result<TestReport> {
    let n = bits.len();
    require(n, MIN_BITS)?;
    let ones = bits.count_ones() as f64;
    let sum = 2.0 * ones - n as f64;
    let s_obs = sum.abs() / (n as f64).sqrt();
    let p = erfc(s_obs / std::f64::consts::SQRT_2);
    Ok(TestReport::new("monobit", s_obs, p, p >= alpha, n))
}

/// Total number of runs `V_n` against its expectation `2nπ(1−π)`.
///
/// Sequences failing the frequency prerequisite `|π − ½| < 2/√n` are
/// reported as failed with p-value 0 and `|π − ½|` as the statistic.
pub fn runs_test(bits: &BitVector, alpha: f64) -> Result<TestReport> {
    let n = bits.len();
    require(n, MIN_BITS)?;
    let nf = n as f64;
    let pi = bits.count_ones() as f64 / nf;
    let tau = 2.0 / nf.sqrt();
    if (pi - 0.5).abs() >= tau {
        let mut r = TestReport::new("runs", (pi - 0.5).abs(), 0.0, false, n);
        r.note = Some(format!(
            "frequency prerequisite failed: |pi - 1/2| = {:.4} >= {tau:.4}",
            (pi - 0.5).abs()
        ));
        return Ok(r);
    }
    let s = bits.as_slice();
    let v_obs = 1 + s.windows(2).filter(|w| w[0] != w[1]).count();
    let spread = pi * (1.0 - pi);
    let p = erfc((v_obs as f64 - 2.0 * nf * spread).abs() / (2.0 * (2.0 * nf).sqrt() * spread));
    Ok(TestReport::new("runs", v_obs as f64, p, p >= alpha, n))
}

/// Pearson χ² of `values` against the uniform law on `0..categories`.
pub fn chi_square_uniformity(
    values: &[usize],
    categories: usize,
    alpha: f64,
) -> Result<TestReport> {
    if categories < 2 {
        return Err(Error::SampleTooSmall {
            size: categories,
            required: 2,
        });
    }
    require(values.len(), 5 * categories)?;
    let mut counts = vec![0u64; categories];
    for &v in values {
        if v >= categories {
            return Err(Error::CategoryOutOfRange {
                value: v,
                categories,
            });
        }
        counts[v] += 1;
    }
    let expected = values.len() as f64 / categories as f64;
    let statistic: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    let p = chi_square_sf(statistic, (categories - 1) as f64);
    Ok(TestReport::new(
        "chi_square_uniformity",
        statistic,
        p,
        p >= alpha,
        values.len(),
    ))
}
