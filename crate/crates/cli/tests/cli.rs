//! End-to-end tests driving the compiled binary.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn abelian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abelian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn write_temp(bytes: &[u8]) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(bytes).unwrap();
    file
}

fn path_str(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn search_prints_positions_one_per_line() {
    let text = write_temp(b"abba");
    let out = abelian(&["search", "--pattern", "ab", "--text-file", path_str(text.path())]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n2\n");
}

#[test]
fn search_supports_one_based_positions() {
    let text = write_temp(b"abba");
    let out = abelian(&[
        "search",
        "--pattern",
        "ab",
        "--text-file",
        path_str(text.path()),
        "--one-based",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n3\n");
}

#[test]
fn search_agrees_across_algorithms() {
    let text = write_temp(b"zzabcbcazz");
    let mut outputs = Vec::new();
    for algo in ["oracle", "wm", "hcam", "bhcam", "hfam", "bhfam", "auto"] {
        let out = abelian(&[
            "search",
            "--pattern",
            "abc",
            "--text-file",
            path_str(text.path()),
            "--algo",
            algo,
        ]);
        assert_eq!(out.status.code(), Some(0), "algo {algo}");
        outputs.push(stdout(&out));
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{outputs:?}");
}

#[test]
fn search_json_carries_counters_and_resolved_algorithm() {
    let text = write_temp(b"abba");
    let out = abelian(&[
        "search",
        "--pattern",
        "ab",
        "--text-file",
        path_str(text.path()),
        "--algo",
        "bhcam",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let object: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(object["algorithm"], "bhcam");
    assert_eq!(object["positions"], serde_json::json!([0, 2]));
    assert!(object["counters"]["inspections"].as_u64().unwrap() > 0);
    assert_eq!(object["counters"]["verified_rejections"], 0);

    // auto resolves to a concrete algorithm in the output.
    let out = abelian(&[
        "search",
        "--pattern",
        "ab",
        "--text-file",
        path_str(text.path()),
        "--json",
    ]);
    let object: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(object["algorithm"], "hcam");
}

#[test]
fn search_reads_binary_patterns_from_file() {
    let pattern = write_temp(&[0u8, 1]);
    let text = write_temp(&[1u8, 0, 0, 1, 1]);
    let out = abelian(&[
        "search",
        "--pattern-file",
        path_str(pattern.path()),
        "--text-file",
        path_str(text.path()),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n2\n");
}

#[test]
fn search_with_long_pattern_succeeds_with_no_output() {
    let text = write_temp(b"ab");
    let out = abelian(&["search", "--pattern", "abba", "--text-file", path_str(text.path())]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "");
}

#[test]
fn usage_errors_exit_1() {
    let text = write_temp(b"abba");
    let out = abelian(&[
        "search",
        "--pattern",
        "ab",
        "--text-file",
        path_str(text.path()),
        "--algo",
        "nope",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("nope"));

    let out = abelian(&["search", "--text-file", path_str(text.path())]);
    assert_eq!(out.status.code(), Some(1));

    let out = abelian(&[]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_and_version_exit_0() {
    let out = abelian(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("search"));

    let out = abelian(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn io_errors_exit_2() {
    let out = abelian(&["search", "--pattern", "ab", "--text-file", "/no/such/file"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("/no/such/file"));
}

#[test]
fn gen_is_deterministic_and_validates_sigma() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for out_path in [&a, &b] {
        let out = abelian(&[
            "gen", "--n", "16", "--sigma", "2", "--seed", "7", "--out", path_str(out_path),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let bytes_a = std::fs::read(&a).unwrap();
    assert_eq!(bytes_a, std::fs::read(&b).unwrap());
    assert_eq!(bytes_a.len(), 16);
    assert!(bytes_a.iter().all(|&byte| byte < 2));

    let out = abelian(&[
        "gen", "--n", "16", "--sigma", "1", "--seed", "7", "--out", path_str(&a),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("alphabet size"));
}

#[test]
fn bench_renders_each_format() {
    let base = [
        "bench", "--random", "4096:2", "--lengths", "2,4", "--runs", "2", "--seed", "3",
    ];

    let mut args = base.to_vec();
    args.extend(["--algos", "wm,hcam,ea"]);
    let out = abelian(&args);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("prefix based"));
    assert!(text.contains("speed-up"));
    assert!(text.contains("ea"));

    let mut args = base.to_vec();
    args.extend(["--format", "csv", "--algos", "wm,hcam"]);
    let out = abelian(&args);
    assert_eq!(out.status.code(), Some(0));
    let csv = stdout(&out);
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "algorithm,m,mean_cs,stddev_cs,inspections,candidates");
    assert_eq!(lines.count(), 4);

    let mut args = base.to_vec();
    args.extend(["--format", "jsonl", "--algos", "hcam"]);
    let out = abelian(&args);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines() {
        let object: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(object["algorithm"], "hcam");
    }
}

#[test]
fn bench_reads_a_corpus_file_and_reports_missing_ones() {
    let corpus = write_temp(&[0u8, 1].repeat(512));
    let out = abelian(&[
        "bench",
        "--text-file",
        path_str(corpus.path()),
        "--lengths",
        "2",
        "--runs",
        "2",
        "--algos",
        "hcam",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().count() == 2);

    let out = abelian(&[
        "bench", "--text-file", "/no/such/corpus", "--lengths", "2", "--runs", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_rejects_bad_parameters() {
    let out = abelian(&["bench", "--random", "4096", "--lengths", "2"]);
    assert_eq!(out.status.code(), Some(1));

    let out = abelian(&["bench", "--random", "4096:2", "--runs", "0", "--lengths", "2"]);
    assert_eq!(out.status.code(), Some(1));

    let out = abelian(&["bench", "--random", "4096:2", "--algos", "bwm"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("bwm"));
}

#[test]
fn closed_stdout_pipe_exits_cleanly() {
    use std::io::Read;
    use std::process::Stdio;

    // A 1-byte pattern over a large binary text yields far more output
    // than a pipe buffer holds, so closing our end mid-stream guarantees
    // the binary sees a broken pipe. It must finish silently with
    // status 0, not panic.
    let text = write_temp(&vec![0u8; 1 << 20]);
    let pattern = write_temp(&[0u8]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_abelian"))
        .args([
            "search",
            "--pattern-file",
            path_str(pattern.path()),
            "--text-file",
            path_str(text.path()),
        ])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut first = [0u8; 2];
    let mut out = child.stdout.take().unwrap();
    out.read_exact(&mut first).unwrap();
    drop(out);
    let status = child.wait().unwrap();
    let mut err = String::new();
    child.stderr.take().unwrap().read_to_string(&mut err).unwrap();
    assert_eq!(first, *b"0\n");
    assert!(err.is_empty(), "stderr not empty: {err}");
    assert_eq!(status.code(), Some(0), "stderr: {err}");
}
