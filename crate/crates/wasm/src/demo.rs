//! Plain Rust behind the browser exports, so it can be tested natively.

use di3_core::di3::{capacity, embed_in_image, ChannelSpec, EmbedOptions};
use di3_core::media::{
    extract_bits, parse_pgm, significance, write_pgm, Image, PgmFormat, SignificationFunction,
};
use di3_core::security::mutants::{DoubleWrite, StrategyLeak};
use di3_core::security::{
    enumerate_with, lsb_chi_square_attack, sample_strategies, Di3Embedder, EnumerationReport,
};
use di3_core::strategy::{Generator, StegoKey};
use di3_core::synth::natural_cover;
use serde::Serialize;
use thiserror::Error;

/// Largest channel the table view enumerates; 2^N rows are rendered.
pub const MAX_TABLE_BITS: usize = 8;

#[derive(Debug, Error)]
pub enum DemoError {
    #[error(transparent)]
    Core(#[from] di3_core::Error),
    #[error("the table view is limited to N <= {MAX_TABLE_BITS}, got N={0}")]
    TableTooLarge(usize),
    #[error("unknown embedder {0:?} (expected di3, double-write or strategy-leak)")]
    UnknownEmbedder(String),
}

pub type DemoResult<T> = Result<T, DemoError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Msc,
    Lsc,
    Passive,
}

const RGBA_ONE: [[u8; 4]; 3] = [
    [110, 160, 255, 255],
    [255, 110, 80, 255],
    [200, 200, 200, 255],
];
const RGBA_ZERO: [[u8; 4]; 3] = [[15, 25, 60, 255], [60, 15, 10, 255], [40, 40, 40, 255]];

fn channel(low: f64, high: f64) -> ChannelSpec {
    ChannelSpec {
        function: SignificationFunction::bit_rank(),
        low,
        high,
    }
}

/// Synthetic cover as binary PGM bytes.
pub fn sample_cover(width: usize, height: usize, seed: u64) -> Vec<u8> {
    write_pgm(&natural_cover(width, height, seed), PgmFormat::Binary)
}

/// RGBA rendering of bit plane `plane` (0 is the least significant bit),
/// tinted by the class of each bit: blue MSC, red LSC, gray passive.
pub fn plane_view(pgm: &[u8], low: f64, high: f64, plane: u8) -> DemoResult<Vec<u8>> {
    let img = parse_pgm(pgm)?;
    let spec = channel(low, high);
    spec.partition(&img)?;
    let shift = u32::from(plane.min(7));
    let offset = 7 - shift as usize;
    let mut rgba = Vec::with_capacity(img.pixels().len() * 4);
    for (i, &px) in img.pixels().iter().enumerate() {
        let u = significance(&spec.function, 8 * i + offset);
        let class = if u >= high {
            Class::Msc
        } else if u <= low {
            Class::Lsc
        } else {
            Class::Passive
        };
        let palette = if (px >> shift) & 1 == 1 {
            &RGBA_ONE
        } else {
            &RGBA_ZERO
        };
        rgba.extend_from_slice(&palette[class as usize]);
    }
    Ok(rgba)
}

/// Per-class bit counts as JSON.
pub fn partition_summary(pgm: &[u8], low: f64, high: f64) -> DemoResult<String> {
    #[derive(Serialize)]
    struct Summary {
        msc: usize,
        lsc: usize,
        passive: usize,
        capacity_bytes: usize,
    }
    let img = parse_pgm(pgm)?;
    let part = channel(low, high).partition(&img)?;
    let summary = Summary {
        msc: part.msc().len(),
        lsc: part.lsc().len(),
        passive: part.passive().len(),
        capacity_bytes: part.lsc().len() / 8,
    };
    Ok(serde_json::to_string(&summary).expect("plain data serializes"))
}

/// Outcome of embedding a text message into a cover.
#[derive(Debug, Clone)]
pub struct EmbedOutcome {
    pub stego_pgm: Vec<u8>,
    /// LSC channel of the cover, one RGBA pixel per channel bit in image order.
    pub lsc_before: Vec<u8>,
    pub lsc_after: Vec<u8>,
    pub likelihood_before: f64,
    pub likelihood_after: f64,
    pub capacity_bits: usize,
}

fn lsc_rgba(img: &Image, spec: &ChannelSpec) -> DemoResult<Vec<u8>> {
    let part = spec.partition(img)?;
    let bits = extract_bits(img, part.lsc())?;
    Ok(bits
        .iter()
        .flat_map(|b| {
            if b {
                [255, 255, 255, 255]
            } else {
                [0, 0, 0, 255]
            }
        })
        .collect())
}

pub fn embed_text(
    pgm: &[u8],
    message: &str,
    key_hex: &str,
    low: f64,
    high: f64,
    prerandomize: bool,
) -> DemoResult<EmbedOutcome> {
    let cover = parse_pgm(pgm)?;
    let spec = channel(low, high);
    let key = StegoKey::from_hex(key_hex, Generator::Fast)?;
    let opts = EmbedOptions {
        lambda: None,
        prerandomize,
    };
    let stego = embed_in_image(&cover, &spec, message.as_bytes(), &key, opts)?;
    Ok(EmbedOutcome {
        stego_pgm: write_pgm(&stego, PgmFormat::Binary),
        lsc_before: lsc_rgba(&cover, &spec)?,
        lsc_after: lsc_rgba(&stego, &spec)?,
        likelihood_before: lsb_chi_square_attack(&cover)?.p_value,
        likelihood_after: lsb_chi_square_attack(&stego)?.p_value,
        capacity_bits: capacity(&cover, &spec)?,
    })
}

#[derive(Debug, Serialize)]
pub struct SecurityTable {
    pub embedder: String,
    pub n_bits: usize,
    pub p_width: usize,
    pub strategies: usize,
    /// Indexed by the stego state read as a word, bit `i` at position `i`.
    pub counts: Vec<u64>,
    pub report: EnumerationReport,
}

/// Exact stego distribution over every cover, message and sampled strategy.
pub fn security_table(
    embedder: &str,
    n: usize,
    p: usize,
    strategies: usize,
) -> DemoResult<SecurityTable> {
    if n > MAX_TABLE_BITS {
        return Err(DemoError::TableTooLarge(n));
    }
    let sampled = sample_strategies(p, strategies, ((n as u64) << 32) | p as u64)?;
    let table = match embedder {
        "di3" => enumerate_with(&Di3Embedder, n, p, &sampled)?,
        "double-write" => enumerate_with(&DoubleWrite, n, p, &sampled)?,
        "strategy-leak" => enumerate_with(&StrategyLeak, n, p, &sampled)?,
        other => return Err(DemoError::UnknownEmbedder(other.to_owned())),
    };
    Ok(SecurityTable {
        embedder: embedder.to_owned(),
        n_bits: n,
        p_width: p,
        strategies,
        counts: table.counts().to_vec(),
        report: table.report(),
    })
}

pub fn security_table_json(
    embedder: &str,
    n: usize,
    p: usize,
    strategies: usize,
) -> DemoResult<String> {
    let table = security_table(embedder, n, p, strategies)?;
    Ok(serde_json::to_string(&table).expect("plain data serializes"))
}
