use std::fs;
use std::path::Path;

use di3_cli::run;
use di3_core::media::{parse_pgm, write_pgm, PgmFormat};
use di3_core::synth::natural_cover;
use serde_json::Value;
use tempfile::TempDir;

struct Outcome {
    code: u8,
    stdout: Vec<u8>,
    stderr: String,
}

fn di3stego(args: &[&str]) -> Outcome {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("di3stego").chain(args.iter().copied());
    let code = run(argv, &mut stdout, &mut stderr);
    Outcome {
        code,
        stdout,
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn json(out: &Outcome) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn keys(v: &Value) -> Vec<&str> {
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort_unstable();
    keys
}

fn cover(dir: &Path, name: &str, w: usize, h: usize, seed: u64) -> String {
    let path = dir.join(name);
    fs::write(
        &path,
        write_pgm(&natural_cover(w, h, seed), PgmFormat::Binary),
    )
    .unwrap();
    path.to_str().unwrap().to_owned()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

#[test]
fn embed_then_extract_recovers_message() {
    let dir = TempDir::new().unwrap();
    let input = cover(dir.path(), "cover.pgm", 64, 48, 3);
    let message = path(&dir, "msg.bin");
    let stego = path(&dir, "stego.pgm");
    let payload: Vec<u8> = (0..200u32).map(|i| (i * 37 % 251) as u8).collect();
    fs::write(&message, &payload).unwrap();

    let out = di3stego(&[
        "embed",
        "--in",
        &input,
        "--out",
        &stego,
        "--key",
        "00ff10",
        "--message",
        &message,
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);

    let out = di3stego(&["extract", "--in", &stego, "--len", "200", "--key", "00ff10"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, payload);

    let recovered = path(&dir, "recovered.bin");
    let out = di3stego(&[
        "extract", "--in", &stego, "--len", "200", "--out", &recovered,
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(fs::read(recovered).unwrap(), payload);
}

#[test]
fn embed_with_bbs_and_ascii_output() {
    let dir = TempDir::new().unwrap();
    let input = cover(dir.path(), "cover.pgm", 32, 32, 9);
    let message = path(&dir, "msg.bin");
    let stego = path(&dir, "stego.pgm");
    fs::write(&message, b"attack at dawn").unwrap();

    let out = di3stego(&[
        "embed",
        "--in",
        &input,
        "--out",
        &stego,
        "--key",
        "abcd",
        "--message",
        &message,
        "--generator",
        "bbs",
        "--bbs-p",
        "11",
        "--bbs-q",
        "19",
        "--lambda",
        "300",
        "--ascii",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(fs::read(&stego).unwrap().starts_with(b"P2\n"));

    let out = di3stego(&["extract", "--in", &stego, "--len", "14"]);
    assert_eq!(out.stdout, b"attack at dawn");
}

#[test]
fn embedding_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let input = cover(dir.path(), "cover.pgm", 40, 40, 5);
    let message = path(&dir, "msg.bin");
    fs::write(&message, b"same key, same image").unwrap();
    let first = path(&dir, "a.pgm");
    let second = path(&dir, "b.pgm");
    for out_path in [&first, &second] {
        let out = di3stego(&[
            "embed",
            "--in",
            &input,
            "--out",
            out_path,
            "--key",
            "0a0b",
            "--message",
            &message,
        ]);
        assert_eq!(out.code, 0);
    }
    assert_eq!(fs::read(first).unwrap(), fs::read(second).unwrap());
}

#[test]
fn capacity_of_512_square_is_one_plane() {
    let dir = TempDir::new().unwrap();
    let input = cover(dir.path(), "big.pgm", 512, 512, 1);
    let out = di3stego(&["capacity", "--in", &input]);
    assert_eq!(out.code, 0);
    let report = json(&out);
    assert_eq!(report["lsc_bits"], 262_144);
    assert_eq!(report["capacity_bytes"], 32_768);

    let out = di3stego(&["capacity", "--in", &input, "--m", "2"]);
    assert_eq!(json(&out)["lsc_bits"], 524_288);
}

#[test]
fn oversize_message_is_a_domain_error() {
    let dir = TempDir::new().unwrap();
    let input = cover(dir.path(), "cover.pgm", 8, 8, 2);
    let message = path(&dir, "msg.bin");
    fs::write(&message, [0u8; 9]).unwrap();
    let out = di3stego(&[
        "embed",
        "--in",
        &input,
        "--out",
        &path(&dir, "o.pgm"),
        "--key",
        "01",
        "--message",
        &message,
    ]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("capacity"), "{}", out.stderr);
}

#[test]
fn domain_and_parse_failures_map_to_exit_codes() {
    let dir = TempDir::new().unwrap();
    let input = cover(dir.path(), "cover.pgm", 16, 16, 2);
    let message = path(&dir, "msg.bin");
    fs::write(&message, [7u8; 4]).unwrap();
    let out_path = path(&dir, "o.pgm");

    let bad_threshold = di3stego(&["capacity", "--in", &input, "--m", "6", "--M", "5"]);
    assert_eq!(bad_threshold.code, 1);

    let short_lambda = di3stego(&[
        "embed",
        "--in",
        &input,
        "--out",
        &out_path,
        "--key",
        "01",
        "--message",
        &message,
        "--lambda",
        "32",
    ]);
    assert_eq!(short_lambda.code, 1);

    let bad_key = di3stego(&[
        "embed",
        "--in",
        &input,
        "--out",
        &out_path,
        "--key",
        "XYZ",
        "--message",
        &message,
    ]);
    assert_eq!(bad_key.code, 1);

    let garbage = path(&dir, "garbage.pgm");
    fs::write(&garbage, b"P7\n1 1\n255\n\0").unwrap();
    assert_eq!(di3stego(&["capacity", "--in", &garbage]).code, 2);
    assert_eq!(
        di3stego(&["capacity", "--in", &path(&dir, "missing.pgm")]).code,
        2
    );
    assert_eq!(di3stego(&["frobnicate"]).code, 2);
    assert_eq!(di3stego(&["--help"]).code, 0);
}

#[test]
fn randomize_only_touches_lsb_plane() {
    let dir = TempDir::new().unwrap();
    let input = cover(dir.path(), "cover.pgm", 24, 24, 4);
    let output = path(&dir, "noisy.pgm");
    let out = di3stego(&[
        "randomize",
        "--in",
        &input,
        "--out",
        &output,
        "--key",
        "feed",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let before = parse_pgm(&fs::read(&input).unwrap()).unwrap();
    let after = parse_pgm(&fs::read(&output).unwrap()).unwrap();
    for (a, b) in before.pixels().iter().zip(after.pixels()) {
        assert_eq!(a >> 1, b >> 1);
    }
    assert_ne!(before.pixels(), after.pixels());
}

#[test]
fn analyze_reports_every_test() {
    let dir = TempDir::new().unwrap();
    cover(dir.path(), "a.pgm", 96, 96, 10);
    cover(dir.path(), "b.pgm", 96, 96, 11);
    let pattern = format!("{}/*.pgm", dir.path().display());
    let out = di3stego(&["analyze", "--glob", &pattern, "--alpha", "0.05"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report = json(&out);
    let files = report["files"].as_array().unwrap();
    assert_eq!(keys(&report), ["files"]);
    assert_eq!(files.len(), 2);
    for file in files {
        assert_eq!(file["lsc_bits"], 96 * 96);
        let names: Vec<&str> = file["reports"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["test"].as_str().unwrap())
            .collect();
        assert_eq!(names.len(), 4, "{names:?}");
        assert_eq!(keys(file), ["lsc_bits", "path", "reports"]);
        for r in file["reports"].as_array().unwrap() {
            assert_eq!(keys(r), ["n", "p_value", "pass", "statistic", "test"]);
            assert!(r["statistic"].is_number());
            let p = r["p_value"].as_f64().unwrap();
            assert!((0.0..=1.0).contains(&p));
            assert!(r["pass"].is_boolean());
            assert!(r["n"].is_u64());
        }
    }
}

#[test]
fn selftest_finds_uniform_distributions() {
    let out = di3stego(&["selftest", "--max-n", "8", "--strategies", "3"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report = json(&out);
    assert_eq!(report["uniform"], true);
    let pairs = report["pairs"].as_array().unwrap();
    assert_eq!(
        pairs.len(),
        (1..=8usize).map(|n| n.min(14 - n)).sum::<usize>()
    );
    for pair in pairs {
        assert_eq!(pair["result"]["uniform"], true);
        assert_eq!(pair["result"]["max_deviation_num"], 0);
    }
}

#[test]
fn selftest_default_strategy_count_to_width_ten() {
    let out = di3stego(&["selftest", "--max-n", "10"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report = json(&out);
    assert_eq!(report["uniform"], true);
    for pair in report["pairs"].as_array().unwrap() {
        assert_eq!(pair["result"]["max_deviation_num"], 0);
    }
}

#[test]
fn selftest_rejects_out_of_range_width() {
    assert_eq!(di3stego(&["selftest", "--max-n", "17"]).code, 2);
}
