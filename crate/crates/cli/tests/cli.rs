use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_z4codes"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn z4codes");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn code_kerdock_m3_prints_both_forms() {
    let o = run(&["code", "--family", "kerdock", "--m", "3"], "");
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("type: 4^4 2^0"));
    for row in ["13121000", "10312100", "10031210", "10003121", "11111111", "01001231"] {
        assert!(s.contains(row), "missing {row}");
    }
}

#[test]
fn code_qrm_r0_is_repetition() {
    let o = run(&["code", "--family", "qrm", "--m", "3", "--r", "0"], "");
    assert!(o.status.success());
    let s = stdout(&o);
    let gen: Vec<&str> = s.lines().skip_while(|l| *l != "generator:").skip(1).take_while(|l| l.starts_with("  ")).collect();
    assert_eq!(gen, ["  11111111"]);
}

#[test]
fn code_goethals_has_parity_check() {
    let o = run(&["code", "--family", "goethals", "--m", "3"], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains("parity-check:"));
}

#[test]
fn bad_parameters_are_usage_errors() {
    assert_eq!(run(&["code", "--family", "preparata", "--m", "1"], "").status.code(), Some(2));
    assert_eq!(run(&["code", "--family", "nosuch", "--m", "3"], "").status.code(), Some(2));
    assert_eq!(run(&["code", "--m", "3"], "").status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", ""], "").status.code(), Some(2));
    assert_eq!(run(&["simulate", "--family", "kerdock", "--m", "3", "--trials", "0"], "").status.code(), Some(2));
}

#[test]
fn encode_zero_word() {
    let o = run(&["encode", "--family", "kerdock", "--m", "3"], "0000\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "00000000\n");
}

#[test]
fn encode_reports_bad_lines_and_continues() {
    let o = run(&["encode", "--family", "kerdock", "--m", "3"], "000\n0001\n");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().count(), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn decode_clean_and_corrupted_octacode_words() {
    let o = run(&["decode", "--family", "preparata", "--m", "3"], "10312100\n10312103\n");
    assert!(o.status.success());
    let r = records(&o);
    assert_eq!(r[0]["status"], "no-error");
    assert_eq!(r[1]["status"], "corrected");
    assert_eq!(r[1]["errorPositions"], serde_json::json!([7]));
    assert_eq!(r[1]["errorValues"], serde_json::json!([3]));
    assert_eq!(r[1]["codeword"], "10312100");
}

#[test]
fn decode_malformed_line_keeps_going() {
    let o = run(&["decode", "--family", "preparata", "--m", "3"], "1031\nabc\n00000000\n");
    assert_eq!(o.status.code(), Some(1));
    let r = records(&o);
    assert_eq!(r.len(), 3);
    assert_eq!(r[0]["status"], "error");
    assert_eq!(r[1]["line"], 2);
    assert_eq!(r[2]["status"], "no-error");
}

#[test]
fn soft_decode_kerdock() {
    let line = "1,0 0,-1 -1,0 0,1 1,0.2 0,0 0,0 0,0\n";
    let o = run(&["decode", "--family", "kerdock", "--m", "3"], line);
    assert!(o.status.success());
    let r = records(&o);
    assert!(r[0]["score"].as_f64().unwrap() > 0.0);
    assert_eq!(r[0]["codeword"].as_str().unwrap().len(), 8);
}

#[test]
fn verify_graphs_reports_pass() {
    let o = run(&["verify", "--suite", "graphs"], "");
    assert!(o.status.success(), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["seed"], 1);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["check"] == "coset graph parameters"));
}

#[test]
fn verify_kerdock_includes_m5_distribution() {
    let o = run(&["verify", "--suite", "kerdock"], "");
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["check"] == "Kerdock weight distribution" && c["parameters"]["m"] == 5 && c["pass"] == true));
}

fn csv_rates(s: &str) -> Vec<f64> {
    s.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect()
}

#[test]
fn simulate_noiseless_is_error_free() {
    let o = run(&["simulate", "--family", "preparata", "--m", "3", "--snr", "inf", "--trials", "500"], "");
    assert!(o.status.success());
    assert_eq!(csv_rates(&stdout(&o)), [0.0]);
}

#[test]
fn simulate_is_deterministic_and_monotone() {
    let args = ["simulate", "--family", "kerdock", "--m", "3", "--snr", "0,2,4", "--trials", "10000", "--seed", "9"];
    let a = run(&args, "");
    let b = run(&args, "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let r = csv_rates(&stdout(&a));
    assert_eq!(r.len(), 3);
    // Adjacent points 2 dB apart differ far beyond the sampling noise at 10^4 trials.
    assert!(r[0] >= r[1] && r[1] >= r[2], "{r:?}");
    assert!(stdout(&a).starts_with("# z4codes"));
}

#[test]
fn output_file_option() {
    let dir = std::env::temp_dir().join(format!("z4codes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("in.txt");
    let output = dir.join("out.txt");
    std::fs::write(&input, "1000\n").unwrap();
    let o = run(
        &["encode", "--family", "kerdock", "--m", "3", "--in", input.to_str().unwrap(), "--out", output.to_str().unwrap()],
        "",
    );
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(&output).unwrap().trim().len(), 8);
    std::fs::remove_dir_all(&dir).ok();
}
