//! `di3stego`: embed, extract, capacity, analyze, randomize and selftest.
//!
//! Exit codes: 0 on success, 1 when a request violates a domain constraint
//! (capacity, thresholds, strategy length, key), 2 on I/O, parse or usage
//! errors. Diagnostics go to stderr; JSON or raw bytes go to stdout or the
//! declared output file.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use di3_core::di3::{
    capacity, embed_in_image, embedding_warnings, extract_from_image, randomize_lscs, ChannelSpec,
    EmbedOptions,
};
use di3_core::media::{
    extract_bits, parse_pgm, write_pgm, Image, PgmFormat, SignificationFunction,
};
use di3_core::security::{
    check_stego_security, chi_square_uniformity, lsb_chi_square_attack, monobit_test, runs_test,
    EnumerationReport, TestReport, DEFAULT_ALPHA,
};
use di3_core::strategy::{BbsParams, Generator, StegoKey};
use di3_core::ErrorKind;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(
    name = "di3stego",
    version,
    about = "DI3 least-significant-coefficient steganography"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hide a message file in a PGM cover.
    Embed(EmbedArgs),
    /// Recover a message of known length.
    Extract(ExtractArgs),
    /// Report the LSC channel size as JSON.
    Capacity(CapacityArgs),
    /// Run the randomness battery and the chi-square attack, as JSON.
    Analyze(AnalyzeArgs),
    /// Overwrite the LSC channel with keyed noise.
    Randomize(RandomizeArgs),
    /// Exhaustively check stego-security on small channels, as JSON.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
struct ChannelArgs {
    /// Weights at or below this value are least significant coefficients.
    #[arg(long = "m", default_value_t = 1.0, allow_negative_numbers = true)]
    low: f64,
    /// Weights at or above this value are most significant coefficients.
    #[arg(long = "M", default_value_t = 5.0, allow_negative_numbers = true)]
    high: f64,
    /// Periodic signification weights, comma separated [default: 8,7,6,5,4,3,2,1].
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<f64>>,
}

impl ChannelArgs {
    fn spec(&self) -> Result<ChannelSpec, CliError> {
        let function = match &self.weights {
            Some(w) => SignificationFunction::new(w.clone())?,
            None => SignificationFunction::bit_rank(),
        };
        Ok(ChannelSpec {
            function,
            low: self.low,
            high: self.high,
        })
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GeneratorArg {
    Fast,
    Bbs,
}

#[derive(Debug, Args)]
struct KeyArgs {
    /// Stego key as lowercase hex.
    #[arg(long)]
    key: String,
    #[arg(long, value_enum, default_value_t = GeneratorArg::Fast)]
    generator: GeneratorArg,
    /// Blum-Blum-Shub prime p (3 mod 4).
    #[arg(long, requires = "bbs_q")]
    bbs_p: Option<u64>,
    /// Blum-Blum-Shub prime q (3 mod 4).
    #[arg(long, requires = "bbs_p")]
    bbs_q: Option<u64>,
    /// Fixed Blum-Blum-Shub start state, for reproducible traces.
    #[arg(long)]
    bbs_x0: Option<u64>,
}

impl KeyArgs {
    fn key(&self) -> Result<StegoKey, CliError> {
        let generator = match self.generator {
            GeneratorArg::Fast => Generator::Fast,
            GeneratorArg::Bbs => {
                let defaults = BbsParams::default();
                Generator::Bbs(BbsParams {
                    p: self.bbs_p.unwrap_or(defaults.p),
                    q: self.bbs_q.unwrap_or(defaults.q),
                    x0: self.bbs_x0,
                })
            }
        };
        Ok(StegoKey::from_hex(&self.key, generator)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Lambda {
    Auto,
    Fixed(usize),
}

impl FromStr for Lambda {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "auto" {
            return Ok(Lambda::Auto);
        }
        s.parse()
            .map(Lambda::Fixed)
            .map_err(|_| format!("expected \"auto\" or a positive integer, got {s:?}"))
    }
}

#[derive(Debug, Args)]
struct EmbedArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "out")]
    output: PathBuf,
    #[command(flatten)]
    key: KeyArgs,
    /// File whose bytes are embedded as-is (encrypt it first).
    #[arg(long)]
    message: PathBuf,
    #[command(flatten)]
    channel: ChannelArgs,
    /// Iteration count, or "auto" for 2P+1.
    #[arg(long, default_value = "auto")]
    lambda: Lambda,
    /// Keep the cover's own LSCs instead of replacing them with keyed noise.
    #[arg(long)]
    no_prerandomize: bool,
    /// Write ASCII (P2) instead of binary (P5).
    #[arg(long)]
    ascii: bool,
}

#[derive(Debug, Args)]
struct ExtractArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Stego key; placement does not depend on it, but it is checked when given.
    #[arg(long)]
    key: Option<String>,
    /// Message length in bytes.
    #[arg(long)]
    len: usize,
    /// Write the message here instead of stdout.
    #[arg(long = "out")]
    output: Option<PathBuf>,
    #[command(flatten)]
    channel: ChannelArgs,
}

#[derive(Debug, Args)]
struct CapacityArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    channel: ChannelArgs,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["input", "glob"]))]
struct AnalyzeArgs {
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Analyze every file matching this pattern.
    #[arg(long)]
    glob: Option<String>,
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    alpha: f64,
    #[command(flatten)]
    channel: ChannelArgs,
}

#[derive(Debug, Args)]
struct RandomizeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "out")]
    output: PathBuf,
    #[command(flatten)]
    key: KeyArgs,
    #[command(flatten)]
    channel: ChannelArgs,
    #[arg(long)]
    ascii: bool,
}

#[derive(Debug, Args)]
struct SelftestArgs {
    /// Largest channel width N to enumerate (at most 16).
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u8).range(1..=16))]
    max_n: u8,
    /// Strategies sampled per (N, P) pair.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u16).range(1..))]
    strategies: u16,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        source: di3_core::Error,
    },
    #[error(transparent)]
    Core(#[from] di3_core::Error),
    #[error("{0}")]
    Output(std::io::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.kind() == ErrorKind::Domain => 1,
            _ => 2,
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load_image(path: &Path) -> Result<Image, CliError> {
    parse_pgm(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn format(ascii: bool) -> PgmFormat {
    if ascii {
        PgmFormat::Ascii
    } else {
        PgmFormat::Binary
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("plain data serializes");
    writeln!(out, "{text}").map_err(CliError::Output)
}

#[derive(Debug, Serialize)]
struct CapacityReport {
    lsc_bits: usize,
    capacity_bytes: usize,
}

#[derive(Debug, Serialize)]
struct FileAnalysis {
    path: String,
    lsc_bits: usize,
    reports: Vec<TestReport>,
}

#[derive(Debug, Serialize)]
struct AnalyzeReport {
    files: Vec<FileAnalysis>,
}

#[derive(Debug, Serialize)]
struct SelftestPair {
    p_width: usize,
    result: EnumerationReport,
}

#[derive(Debug, Serialize)]
struct SelftestReport {
    strategies: usize,
    pairs: Vec<SelftestPair>,
    uniform: bool,
}

fn embed(args: &EmbedArgs, err: &mut dyn Write) -> Result<(), CliError> {
    let cover = load_image(&args.input)?;
    let message = read(&args.message)?;
    let channel = args.channel.spec()?;
    let key = args.key.key()?;
    let available = capacity(&cover, &channel)?;
    for warning in embedding_warnings(&message, available) {
        let _ = writeln!(err, "warning: {warning}");
    }
    let opts = EmbedOptions {
        lambda: match args.lambda {
            Lambda::Auto => None,
            Lambda::Fixed(l) => Some(l),
        },
        prerandomize: !args.no_prerandomize,
    };
    let stego = embed_in_image(&cover, &channel, &message, &key, opts)?;
    write(&args.output, &write_pgm(&stego, format(args.ascii)))
}

fn extract(args: &ExtractArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if let Some(hex) = &args.key {
        StegoKey::from_hex(hex, Generator::Fast)?;
    }
    let img = load_image(&args.input)?;
    let message = extract_from_image(&img, &args.channel.spec()?, args.len)?;
    match &args.output {
        Some(path) => write(path, &message),
        None => out.write_all(&message).map_err(CliError::Output),
    }
}

fn analyze_image(
    path: &Path,
    alpha: f64,
    channel: &ChannelSpec,
    err: &mut dyn Write,
) -> Result<FileAnalysis, CliError> {
    let img = load_image(path)?;
    let part = channel.partition(&img)?;
    let bits = extract_bits(&img, part.lsc())?;
    let mut reports = Vec::new();
    let mut record = |name: &str, result: di3_core::Result<TestReport>| match result {
        Ok(r) => {
            if let Some(note) = &r.note {
                let _ = writeln!(err, "{}: {name}: {note}", path.display());
            }
            reports.push(r);
        }
        Err(e) => {
            let _ = writeln!(err, "{}: {name} skipped: {e}", path.display());
        }
    };
    record("monobit", monobit_test(&bits, alpha));
    record("runs", runs_test(&bits, alpha));
    let bytes = bits.to_bytes();
    let uniformity = if bytes.len() >= 5 * 256 {
        let values: Vec<usize> = bytes.iter().map(|&b| usize::from(b)).collect();
        chi_square_uniformity(&values, 256, alpha)
    } else {
        let values: Vec<usize> = bits.iter().map(usize::from).collect();
        chi_square_uniformity(&values, 2, alpha)
    };
    record("chi_square_uniformity", uniformity);
    record("lsb_chi_square_attack", lsb_chi_square_attack(&img));
    Ok(FileAnalysis {
        path: path.display().to_string(),
        lsc_bits: bits.len(),
        reports,
    })
}

fn analyze(args: &AnalyzeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    if !(args.alpha > 0.0 && args.alpha < 1.0) {
        return Err(CliError::Usage(format!(
            "alpha must lie in (0, 1), got {}",
            args.alpha
        )));
    }
    let channel = args.channel.spec()?;
    let paths: Vec<PathBuf> = match (&args.input, &args.glob) {
        (Some(path), _) => vec![path.clone()],
        (None, Some(pattern)) => {
            let mut paths = glob::glob(pattern)
                .map_err(|e| CliError::Usage(format!("bad glob pattern: {e}")))?
                .filter_map(Result::ok)
                .collect::<Vec<_>>();
            paths.sort();
            paths
        }
        (None, None) => unreachable!("clap enforces one source"),
    };
    let files = paths
        .iter()
        .map(|p| analyze_image(p, args.alpha, &channel, err))
        .collect::<Result<Vec<_>, _>>()?;
    emit_json(out, &AnalyzeReport { files })
}

fn selftest(args: &SelftestArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let max_n = usize::from(args.max_n);
    let strategies = usize::from(args.strategies);
    let mut pairs = Vec::new();
    for n in 1..=max_n {
        // Widths up to min(N, 14 − N), and at least one for wide channels.
        let max_p = n.min(14usize.saturating_sub(n)).max(1);
        for p in 1..=max_p {
            pairs.push(SelftestPair {
                p_width: p,
                result: check_stego_security(n, p, strategies)?,
            });
        }
    }
    let uniform = pairs
        .iter()
        .all(|pair| pair.result.uniform && pair.result.max_deviation_num == 0);
    emit_json(
        out,
        &SelftestReport {
            strategies,
            pairs,
            uniform,
        },
    )?;
    if uniform {
        Ok(())
    } else {
        Err(CliError::Usage("stego distribution is not uniform".into()))
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Embed(args) => embed(args, err),
        Command::Extract(args) => extract(args, out),
        Command::Capacity(args) => {
            let img = load_image(&args.input)?;
            let lsc_bits = capacity(&img, &args.channel.spec()?)?;
            emit_json(
                out,
                &CapacityReport {
                    lsc_bits,
                    capacity_bytes: lsc_bits / 8,
                },
            )
        }
        Command::Analyze(args) => analyze(args, out, err),
        Command::Randomize(args) => {
            let img = load_image(&args.input)?;
            let part = args.channel.spec()?.partition(&img)?;
            let randomized = randomize_lscs(&img, &part, &args.key.key()?)?;
            write(&args.output, &write_pgm(&randomized, format(args.ascii)))
        }
        Command::Selftest(args) => selftest(args, out),
    }
}

/// Runs the tool on `argv` and returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                return 2;
            }
            let _ = out.write_all(text.as_bytes());
            return 0;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
