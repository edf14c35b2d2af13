//! Checks on the stego-security claim.
//!
//! Stego-security under a watermark-only attack means the stego channel has
//! the same distribution as the cover channel for every key. With a uniform
//! cover and a uniform (encrypted) message that is the uniform distribution,
//! which [`check_stego_security`] verifies exactly, by enumerating every
//! cover and message for a sample of strategies and comparing rational
//! probabilities.
//!
//! The statistical tests ([`monobit_test`], [`runs_test`],
//! [`chi_square_uniformity`]) and the pairs-of-values probe
//! ([`lsb_chi_square_attack`]) look at real channels, where the uniform-cover
//! assumption has to be earned, typically through
//! [`randomize_lscs`](crate::di3::randomize_lscs).

mod attack;
mod enumerate;
pub mod mutants;
mod randomness;

use serde::Serialize;

pub use attack::lsb_chi_square_attack;
pub use enumerate::{
    check_stego_security, check_stego_security_with, enumerate_stego_distribution, enumerate_with,
    sample_strategies, Di3Embedder, DistributionTable, Embedder, EnumerationReport,
    MAX_ENUMERATION_BITS,
};
pub use randomness::{chi_square_uniformity, monobit_test, runs_test};

/// Significance level used unless a caller picks another.
pub const DEFAULT_ALPHA: f64 = 0.01;

/// Outcome of one statistical test.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TestReport {
    #[serde(rename = "test")]
    pub test_name: String,
    pub statistic: f64,
    pub p_value: f64,
    pub pass: bool,
    #[serde(rename = "n")]
    pub sample_size: usize,
    /// Why the test failed without computing a p-value, if it did.
    #[serde(skip)]
    pub note: Option<String>,
}

impl TestReport {
    fn new(test_name: &str, statistic: f64, p_value: f64, pass: bool, sample_size: usize) -> Self {
        TestReport {
            test_name: test_name.to_owned(),
            statistic,
            p_value: p_value.clamp(0.0, 1.0),
            pass,
            sample_size,
            note: None,
        }
    }
}

/// Upper tail of the χ² distribution with `dof` degrees of freedom.
pub(crate) fn chi_square_sf(statistic: f64, dof: f64) -> f64 {
    if statistic <= 0.0 {
        1.0
    } else {
        statrs::function::gamma::gamma_ur(dof / 2.0, statistic / 2.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_shape() {
        let r = TestReport::new("monobit", 0.5, 0.6, true, 100);
        let v = serde_json::to_value(&r).unwrap();
        let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, ["n", "p_value", "pass", "statistic", "test"]);
    }

    #[test]
    fn chi_square_tail_reference_values() {
        // dof = 2 has the closed form exp(-x/2).
        for x in [0.1, 1.0, 5.0, 20.0] {
            let exact = (-x / 2.0f64).exp();
            assert!((chi_square_sf(x, 2.0) - exact).abs() <= 1e-9 * exact);
        }
        // dof = 1: erfc(sqrt(x/2)); 25 -> 5.733031437583892e-7.
        let p = chi_square_sf(25.0, 1.0);
        assert!((p - 5.733_031_437_583_89e-7).abs() <= 1e-9 * p);
        assert_eq!(chi_square_sf(0.0, 5.0), 1.0);
    }
}
