//! Pairs-of-values χ² attack on the least significant bit plane.
//!
//! Overwriting LSBs with random bits pulls the counts of each gray-level
//! pair `(2i, 2i+1)` toward their mean. The statistic compares the even bin
//! with that mean; its upper-tail probability is the reported embedding
//! likelihood, close to 1 for equalized pairs and close to 0 for the uneven
//! pairs of most untouched images.

use super::{chi_square_sf, TestReport, DEFAULT_ALPHA};
use crate::media::Image;
use crate::{Error, Result};

/// Pairs whose expected count is below this are left out.
const MIN_EXPECTED: f64 = 5.0;

/// `p_value` is the embedding likelihood; `pass` means the image was not
/// flagged, i.e. the likelihood stays below `1 − α`.
pub fn lsb_chi_square_attack(img: &Image) -> Result<TestReport> {
    let hist = img.histogram();
    let mut statistic = 0.0;
    let mut pairs = 0usize;
    for pair in hist.chunks_exact(2) {
        let expected = (pair[0] + pair[1]) as f64 / 2.0;
        if expected < MIN_EXPECTED {
            continue;
        }
        let d = pair[0] as f64 - expected;
        statistic += d * d / expected;
        pairs += 1;
    }
    if pairs < 2 {
        return Err(Error::DegenerateHistogram(format!(
            "{pairs} gray-level pair(s) with at least {MIN_EXPECTED} expected samples"
        )));
    }
    let likelihood = chi_square_sf(statistic, (pairs - 1) as f64);
    Ok(TestReport::new(
        "lsb_chi_square_attack",
        statistic,
        likelihood,
        likelihood < 1.0 - DEFAULT_ALPHA,
        img.pixels().len(),
    ))
}
