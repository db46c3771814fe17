mod common;

use common::*;
use nnseq::cli::{run, CliOutput};

fn nnseq(args: &[&str]) -> CliOutput {
    run(args.iter().copied())
}

#[test]
fn verify_published_record() {
    let out = nnseq(&[
        "verify",
        "--kind",
        "nn",
        "--record",
        "NN 36 0764841234846532153 165154775335162126",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.lines().next(), Some("pass"));
    assert!(out.stdout.contains("sums 3,-3,8,8"));
}

#[test]
fn verify_false_is_exit_one() {
    let out = nnseq(&["verify", "--kind", "bs", "++;++;++;++"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("fail"));
}

#[test]
fn usage_errors_are_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["verify"],
        &["verify", "++;+-;+;+"],
        &["verify", "--kind", "ns", "--record", "NN 2 01 1"],
        &["verify", "--record", "NN 2 0x 1"],
        &["search", "--kind", "nn"],
        &["search", "--kind", "nn", "--order", "30"],
        &["search", "--kind", "nn", "--order", "4", "--cases", "13"],
        &["catalog", "yang", "10"],
        &["encode", "--kind", "ts", "+;0;0;0"],
    ] {
        let out = nnseq(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_is_exit_zero() {
    let out = nnseq(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("search"));
}

#[test]
fn hadamard_292_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h292.txt");
    let out = nnseq(&[
        "construct",
        "hadamard",
        "--from-record",
        &row_record(5),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.trim(), "HHᵀ = 292·I: pass");

    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<Vec<i64>> = text
        .lines()
        .map(|l| l.chars().map(|c| if c == '+' { 1 } else { -1 }).collect())
        .collect();
    assert_eq!(rows.len(), 292);
    assert!(rows.iter().all(|r| r.len() == 292));
    assert!(is_scaled_identity(&gram(&rows), 292));
}

#[test]
fn construct_ts_and_od() {
    let out = nnseq(&["construct", "ts", "--from-record", "NS 1 ++;+-;+;+"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("TS 3 "));
    let out = nnseq(&["construct", "od", "--from-record", "TS 1 +;0;0;0"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("4 4\n"));
    assert!(out.stdout.contains("OD(4;1,1,1,1): pass"));
    let out = nnseq(&["construct", "ts", "--from-record", "BS 1 ++;++;+;+"]);
    assert_eq!(out.code, 2);
}

#[test]
fn normal_order_six_is_empty() {
    let out = nnseq(&["search", "--kind", "ns", "--order", "6", "--mode", "count"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("NS(6) count 0\n"));
}

#[test]
fn search_lists_records() {
    let out = nnseq(&["search", "--kind", "nn", "--order", "4", "--classes"]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "NN(4) count 2");
    for l in &lines[1..3] {
        let v = nnseq(&["verify", "--record", l]);
        assert_eq!(v.code, 0, "{l}");
    }
}

#[test]
fn search_output_is_reproducible() {
    let args = [
        "search", "--kind", "nn", "--order", "6", "--cases", "3,7", "--format", "json",
    ];
    let a = nnseq(&args);
    let b = nnseq(&[&args[..], &["--workers", "1"]].concat());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["complete"], true);
    assert_eq!(
        v["solutions"].as_array().unwrap().len() as u64,
        v["count"].as_u64().unwrap()
    );
}

#[test]
fn checkpoint_then_resume() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("nn8.ckpt");
    let cp = cp.to_str().unwrap();
    let full = nnseq(&["search", "--kind", "nn", "--order", "8", "--mode", "count"]);
    let partial = nnseq(&[
        "search",
        "--kind",
        "nn",
        "--order",
        "8",
        "--mode",
        "count",
        "--checkpoint",
        cp,
        "--checkpoint-every",
        "150",
        "--max-nodes",
        "400",
    ]);
    assert_eq!(partial.code, 2);
    assert!(partial.stderr.contains("--resume"));
    let text = std::fs::read_to_string(cp).unwrap();
    assert!(text.starts_with("# nnseq checkpoint\nkind NN\norder 8\n"));
    let resumed = nnseq(&[
        "search", "--kind", "nn", "--order", "8", "--mode", "count", "--resume", cp,
    ]);
    assert_eq!(resumed, full);

    // a chunked run that finishes removes its checkpoint
    let done = nnseq(&[
        "search",
        "--kind",
        "nn",
        "--order",
        "8",
        "--mode",
        "count",
        "--checkpoint",
        cp,
        "--checkpoint-every",
        "150",
    ]);
    assert_eq!(done, full);
    assert!(!std::path::Path::new(cp).exists());
}

#[test]
fn decode_then_encode_reproduces_rows() {
    for i in 0..ROWS.len() {
        let line = row_record(i);
        let decoded = nnseq(&["decode", "--record", &line]);
        assert_eq!(decoded.code, 0);
        let encoded = nnseq(&["encode", "--record", decoded.stdout.trim()]);
        assert_eq!(encoded.code, 0);
        assert_eq!(encoded.stdout, format!("{line}\n"));
    }
    let out = nnseq(&["decode", "--record", &row_record(5)]);
    let printed: Vec<String> = NN36_PRINTED.iter().map(|s| s.replace(' ', "")).collect();
    assert_eq!(out.stdout.trim(), format!("NN 36 {}", printed.join(";")));
}

#[test]
fn catalog_queries() {
    let out = nnseq(&["catalog", "status", "--kind", "ns", "--order", "34"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("NS(34) Empty"));
    assert_eq!(nnseq(&["catalog", "status", "--kind", "nn", "--order", "36"]).code, 0);
    assert_eq!(nnseq(&["catalog", "status", "--kind", "nn", "--order", "38"]).code, 2);
    assert_eq!(nnseq(&["catalog", "yang", "73"]).stdout, "73 yes\n");
    assert_eq!(nnseq(&["catalog", "yang", "71"]).code, 1);
    let all = nnseq(&["catalog", "yang", "--up-to", "73"]);
    assert_eq!(all.stdout.lines().filter(|l| l.ends_with(" no")).count(), 7);
    assert_eq!(nnseq(&["catalog", "golay", "26"]).code, 0);
    assert_eq!(nnseq(&["catalog", "golay", "73"]).code, 1);
    let t = nnseq(&["catalog", "table1"]);
    assert_eq!(t.stdout.lines().count(), 6);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.txt");
    let path = path.to_str().unwrap();
    assert_eq!(nnseq(&["catalog", "save", path]).code, 0);
    assert_eq!(nnseq(&["catalog", "check", path]).stdout, "6 records: pass\n");
    let bad = std::fs::read_to_string(path)
        .unwrap()
        .replacen("NN 34 07641", "NN 34 07642", 1);
    std::fs::write(path, bad).unwrap();
    let out = nnseq(&["catalog", "check", path]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("fail: line 2"));
}

#[test]
fn golay_subcommand() {
    let out = nnseq(&["construct", "golay", "--length", "2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("golay(2) count 8\n"));
    assert_eq!(nnseq(&["construct", "golay", "--length", "3"]).code, 1);
    let ns = nnseq(&["construct", "golay", "--length", "10", "--ns", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&ns.stdout).unwrap();
    let first = v["items"][0].as_str().unwrap();
    assert_eq!(nnseq(&["verify", "--record", first]).code, 0);
}

#[test]
fn json_verify_names_the_failure() {
    let out = nnseq(&["verify", "--format", "json", "--kind", "bs", "++;++;++;++"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["pass"], false);
    assert!(v["failure"].is_object());
}
