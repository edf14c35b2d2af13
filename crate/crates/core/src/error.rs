use thiserror::Error;

/// Every failure the toolkit can report.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("bad magic number: expected P2 or P5")]
    BadMagic,
    #[error("malformed PGM: {0}")]
    Malformed(String),
    #[error("maxval {0} outside [1, 255]")]
    MaxvalOutOfRange(u64),
    #[error("pixel count mismatch: expected {expected}, found {found}")]
    PixelCountMismatch { expected: usize, found: usize },
    #[error("pixel value {value} at index {index} exceeds maxval {maxval}")]
    PixelExceedsMaxval {
        index: usize,
        value: u32,
        maxval: u8,
    },
    #[error("invalid image dimensions {width}x{height}")]
    InvalidDimensions { width: usize, height: usize },

    #[error("bit index {index} out of range for {bit_length} bits")]
    IndexOutOfRange { index: usize, bit_length: usize },
    #[error("writing bits would push pixel {index} to {value}, above maxval {maxval}")]
    WriteExceedsMaxval {
        index: usize,
        value: u32,
        maxval: u8,
    },
    #[error("length mismatch: {indices} indices but {bits} bits")]
    LengthMismatch { indices: usize, bits: usize },
    #[error("partition covers {partition} bits but the image has {image}")]
    PartitionMismatch { partition: usize, image: usize },
    #[error("threshold error: need m < M, got m={low} and M={high}")]
    Threshold { low: f64, high: f64 },
    #[error("empty signification function")]
    EmptySignification,
    #[error("signification weight {0} is not finite")]
    NonFiniteWeight(f64),

    #[error("strategy length {lambda} must exceed message width {width}")]
    StrategyLength { lambda: usize, width: usize },
    #[error("message width must be at least 1")]
    ZeroWidth,
    #[error("strategy term {term} at position {position} outside [0, {width})")]
    TermOutOfRange {
        position: usize,
        term: usize,
        width: usize,
    },
    #[error("final {width} strategy terms are not injective")]
    TailNotInjective { width: usize },
    #[error("strategy width {strategy} does not match message width {message}")]
    WidthMismatch { strategy: usize, message: usize },
    #[error("invalid key: {0}")]
    InvalidKey(String),
    #[error("invalid Blum-Blum-Shub parameters: {0}")]
    InvalidBbs(String),

    #[error("capacity exceeded: {needed} message bits but only {available} LSC bits")]
    Capacity { needed: usize, available: usize },

    #[error("enumeration too large: N={n}, P={p} (need N <= 16, P <= N, N + P <= 24)")]
    EnumerationBounds { n: usize, p: usize },
    #[error("no strategies supplied")]
    NoStrategies,
    #[error("sample too small: {size} < {required}")]
    SampleTooSmall { size: usize, required: usize },
    #[error("value {value} outside [0, {categories})")]
    CategoryOutOfRange { value: usize, categories: usize },
    #[error("degenerate histogram: {0}")]
    DegenerateHistogram(String),
}

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input could not be read as a valid carrier.
    Parse,
    /// The input was well formed but the request violates a domain constraint.
    Domain,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::BadMagic
            | Error::Malformed(_)
            | Error::MaxvalOutOfRange(_)
            | Error::PixelCountMismatch { .. }
            | Error::PixelExceedsMaxval { .. }
            | Error::InvalidDimensions { .. } => ErrorKind::Parse,
            _ => ErrorKind::Domain,
        }
    }
}
