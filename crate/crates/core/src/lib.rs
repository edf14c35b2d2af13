//! # di3-core
//!
//! Least-significant-coefficient steganography built around the DI₃ iteration:
//! a keyed strategy drives single-position writes of message bits into the
//! LSC channel of a grayscale cover. The crate also carries the machinery used
//! to check the scheme's stego-security claim: an exact enumeration of the
//! stego distribution on small channels, a desk-scale randomness battery and
//! a pairs-of-values chi-square probe.
//!
//! Modules follow the data flow:
//!
//! * [`media`] parses and writes PGM files, addresses bits and partitions them
//!   into most/least significant and passive coefficients.
//! * [`strategy`] holds strategy sequences, keyed bit streams (Blum-Blum-Shub
//!   and a SHA-256 counter stream) and strategy generation.
//! * [`di3`] is the embedder, its substitution oracle, extraction and the
//!   whole-image pipeline.
//! * [`security`] is the enumeration oracle, statistical tests and the
//!   chi-square attack.

pub mod di3;
mod error;
pub mod media;
pub mod security;
pub mod strategy;
pub mod synth;

pub use error::{Error, ErrorKind};

pub type Result<T> = std::result::Result<T, Error>;
