//! Deterministic synthetic covers for demos and tests.
//!
//! A cover is a smooth luminance field (gradient plus a few low-frequency
//! waves) with mild sensor-like noise, then contrast stretched with rounding.
//! The stretch leaves the comb-shaped histogram typical of post-processed
//! photographs, so gray-level pairs are uneven as in natural images.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::media::Image;

/// Synthetic `width × height` cover with maxval 255.
pub fn natural_cover(width: usize, height: usize, seed: u64) -> Image {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let waves: Vec<(f64, f64, f64, f64)> = (0..4)
        .map(|_| {
            (
                rng.random_range(8.0..28.0),
                rng.random_range(0.5..4.0),
                rng.random_range(0.5..4.0),
                rng.random_range(0.0..std::f64::consts::TAU),
            )
        })
        .collect();
    let (gx, gy) = (rng.random_range(-40.0..40.0), rng.random_range(-40.0..40.0));
    let base = rng.random_range(90.0..130.0);
    let stretch = rng.random_range(1.25..1.6);
    let noise = rng.random_range(1.0..4.0);

    let mut pixels = Vec::with_capacity(width * height);
    for y in 0..height {
        for x in 0..width {
            let (u, v) = (x as f64 / width as f64, y as f64 / height as f64);
            let mut value = base + gx * (u - 0.5) + gy * (v - 0.5);
            for &(amp, fx, fy, phase) in &waves {
                value += amp * (std::f64::consts::TAU * (fx * u + fy * v) + phase).sin();
            }
            // Irwin-Hall approximation of a unit-variance normal.
            let n: f64 = (0..12).map(|_| rng.random::<f64>()).sum::<f64>() - 6.0;
            value += noise * n;
            let level = value.round().clamp(0.0, 180.0);
            let stretched = ((level - 90.0) * stretch + 128.0).round().clamp(0.0, 255.0);
            pixels.push(stretched as u8);
        }
    }
    Image::new(width, height, 255, pixels).expect("dimensions match")
}
