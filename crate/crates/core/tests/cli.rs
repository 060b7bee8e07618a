use std::io::Write;
use std::process::{Command, Output, Stdio};

use vvmf::QSeries;

fn vvmf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vvmf"))
        .args(args)
        .env_remove("VVMF_DEFAULT_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn dim_of_weight_twelve() {
    let o = vvmf(&["dim", "12"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn classify_two_dimensional() {
    let o = vvmf(&["vvmf", "classify", "-d", "2", "-r", "1/12,5/12", "-m", "0"]);
    assert!(o.status.success());
    let j = json(&o);
    assert_eq!(j["minimal_weight"], "2");
    assert_eq!(j["hp_numerator"], serde_json::json!([1, 0, 1]));
}

#[test]
fn congruent_roots_are_a_domain_error() {
    let o = vvmf(&["mlde", "from-roots", "0", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("CongruentRoots:"));
}

#[test]
fn invalid_representation_is_a_domain_error() {
    let o = vvmf(&["vvmf", "classify", "-d", "3", "-r", "0,1/3,1/2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("DivisibilityViolation:"));
}

#[test]
fn usage_errors_name_the_flag() {
    let o = vvmf(&["delta", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--bogus"));
    let o = vvmf(&["eta", "--power", "x/2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--power"));
}

#[test]
fn series_json_round_trips() {
    let o = vvmf(&["eta", "--power", "-5/3", "--order", "8"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let s = QSeries::from_json_str(&text).unwrap();
    assert_eq!(s.leading_exponent().to_string(), "-5/72");
    let again = serde_json::to_string_pretty(&s.to_json()).unwrap() + "\n";
    assert_eq!(again, text);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--order",
        "20",
        "vvmf",
        "basis",
        "-d",
        "3",
        "-r",
        "1/7,2/7,4/7",
    ];
    let a = vvmf(&args);
    let b = vvmf(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a).as_array().unwrap().len(), 3);
}

#[test]
fn order_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_vvmf"))
        .args(["delta"])
        .env("VVMF_DEFAULT_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(json(&o)["order"], 4);
    assert_eq!(json(&vvmf(&["delta"]))["order"], 25);
}

#[test]
fn text_format_marks_truncation() {
    let o = vvmf(&["--format", "text", "delta", "--order", "3"]);
    assert_eq!(
        stdout(&o),
        "q^{1}·(1 - 24 q + 252 q^2 - 1472 q^3) + O(q^{5})\n"
    );
}

#[test]
fn solve_emits_fundamental_system() {
    let o = vvmf(&["mlde", "solve", "--roots", "1/12,5/12", "--order", "6"]);
    assert!(o.status.success());
    let j = json(&o);
    let leads: Vec<&str> = j
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["leading_exponent"].as_str().unwrap())
        .collect();
    assert_eq!(leads, ["1/12", "5/12"]);
}

#[test]
fn wronskian_reads_a_basis_vector_from_stdin() {
    let basis = vvmf(&[
        "--order",
        "20",
        "vvmf",
        "basis",
        "-d",
        "2",
        "-r",
        "1/12,5/12",
    ]);
    let first = serde_json::to_string(&json(&basis)[0]).unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_vvmf"))
        .args(["vvmf", "wronskian"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(first.as_bytes())
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    let j = json(&o);
    assert_eq!(j["is_pure_eta_power"], true);
    assert_eq!(j["lambda"], "1/2");
}

#[test]
fn selftest_filter_and_fault_injection() {
    let o = vvmf(&["selftest", "--only", "hp"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("[PASS]"))
            .count(),
        1
    );
    let o = vvmf(&["selftest", "--only", "delta", "--inject-fault", "bernoulli"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("[FAIL]"));
}
