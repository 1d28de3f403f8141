use std::process::{Command, Output};
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::Value;

fn composet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_composet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = composet(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--output", "json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn worked_example_both_methods() {
    let out = stdout(&[
        "mobius",
        "2,1,1,1,3",
        "2,2,1,1,1,3,3",
        "--poset",
        "chain:3",
        "--method",
        "both",
    ]);
    assert_eq!(out.trim(), "mu=2 agree=true");
    let out = stdout(&[
        "mobius",
        "a,b,b,a",
        "a,b,a,b,b,b,a,a",
        "--poset",
        "antichain:2",
    ]);
    assert_eq!(out.trim(), "mu=2");
}

#[test]
fn empty_type_length_genfun() {
    assert_eq!(
        stdout(&["genfun", "Mlen", "--type", "0,0", "--n", "3"]).trim(),
        "1 - t"
    );
}

#[test]
fn normal_method_on_lambda_is_a_domain_error() {
    let out = composet(&[
        "mobius", "a", "c", "--poset", "lambda", "--method", "normal",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported poset"));
    assert_eq!(
        stdout(&["mobius", "a", "c", "--poset", "lambda"]).trim(),
        "mu=-1"
    );
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["frobnicate"][..],
        &["mobius", "1"],
        &["mobius", "1", "x", "--poset", "chain:2"],
        &["mobius", "1", "2", "--poset", "tree:3"],
        &["genfun", "Zlen"],
        &["genfun", "Zlen", "--type", "1,-1"],
    ] {
        let out = composet(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert!(composet(&["--help"]).status.success());
}

#[test]
fn default_poset_is_the_chain_on_the_largest_letter() {
    assert_eq!(stdout(&["mobius", "2", "3"]).trim(), "mu=-1");
    assert_eq!(stdout(&["mobius", "1", "3"]).trim(), "mu=0");
    assert_eq!(stdout(&["zeta-power", "1", "1,2", "2"]).trim(), "zeta^2=4");
}

#[test]
fn interval_and_embeddings() {
    let lines: Vec<String> = stdout(&["interval", "1", "1,2", "--poset", "chain:2"])
        .lines()
        .map(String::from)
        .collect();
    assert_eq!(lines, ["1", "2", "1,1", "1,2"]);
    let out = stdout(&["embeddings", "1", "1,2", "--poset", "chain:2"]);
    assert_eq!(out.lines().last(), Some("count=2"));
    let out = stdout(&["embeddings", "2,1,1,1,3", "2,2,1,1,1,3,3", "--normal"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[..2].iter().all(|l| l.contains("defect=")));
    assert_eq!(lines[2], "mu=2");
}

#[test]
fn series_and_automaton() {
    let z = json(&["series", "Z", "2", "--poset", "chain:2", "--bound", "2"]);
    let words: Vec<&str> = z["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["word"].as_str().unwrap())
        .collect();
    assert_eq!(words, ["2", "1,2", "2,1", "2,2"]);
    let dump = stdout(&["automaton", "M", "--n", "3"]);
    assert!(dump.contains("b3 -> b3 : +3⊗3 - 2⊗3 + ε⊗3"));
    assert!(dump.contains("alpha -> b1 : +1⊗1 - ε⊗1"));
    let accepted = json(&["automaton", "M", "--n", "3", "--accept", "2"]);
    let coeff = accepted["terms"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["u"] == "1" && t["w"] == "1,1")
        .map(|t| t["coeff"].as_str().unwrap().to_string());
    assert_eq!(coeff.as_deref(), Some("-1"));
}

#[test]
fn genfun_taylor_and_rank_function() {
    let out = stdout(&["genfun", "Znorm", "--type", "", "--n", "1", "--taylor", "5"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1], "1,1,1,1,1,1");
    let out = stdout(&["genfun", "ZPnorm", "--type", "", "--taylor", "6"]);
    assert_eq!(out.lines().nth(1), Some("1,1,2,4,8,16,32"));
    let out = stdout(&["genfun", "am-bm", "--m", "1"]);
    assert!(out.starts_with("a_1 = "));
    assert!(out.lines().nth(1).unwrap().starts_with("b_1 = "));
}

#[test]
fn verify_reports_pass() {
    for check in ["sum-identity", "closed-forms", "oracle-suite", "displays"] {
        let out = stdout(&["verify", check]);
        assert!(out.trim_end().ends_with("PASS overall"), "{check}: {out}");
        assert!(!out.contains("FAIL"));
    }
    let out = stdout(&["verify", "telescoping", "--n", "4", "--bound", "5"]);
    assert!(out.trim_end().ends_with("PASS overall"));
}

#[test]
fn lambda_table() {
    let out = stdout(&["lambda", "--max", "3"]);
    assert_eq!(out.lines().count(), 5);
    assert!(!out.contains("MISMATCH"));
    assert!(out.contains("-8/-8/OK"));
}

#[test]
fn json_integers_round_trip() {
    let ones = vec!["1"; 20].join(",");
    let big = json(&["zeta-power", "", &ones, "200", "--poset", "chain:1"]);
    let value = BigInt::from_str(big["value"].as_str().unwrap()).unwrap();
    assert_eq!(value.to_string(), big["value"].as_str().unwrap());
    assert!(value > BigInt::from(u64::MAX));

    let table = json(&["lambda", "--max", "2"]);
    for cell in table["cells"].as_array().unwrap() {
        let mu = BigInt::from_str(cell["mu"].as_str().unwrap()).unwrap();
        let coeff = BigInt::from_str(cell["coeff"].as_str().unwrap()).unwrap();
        assert_eq!(mu, coeff);
    }
    let f = json(&["genfun", "Zlen", "--type", "1", "--n", "2", "--taylor", "3"]);
    let taylor: Vec<BigInt> = f["taylor"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| BigInt::from_str(c.as_str().unwrap()).unwrap())
        .collect();
    assert_eq!(taylor.len(), 4);
}

#[test]
fn output_is_deterministic() {
    let args = ["--output", "json", "series", "M", "1,2", "--bound", "4"];
    assert_eq!(composet(&args).stdout, composet(&args).stdout);
}

#[test]
fn poset_file() {
    let dir = std::env::temp_dir().join(format!("composet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lambda.json");
    std::fs::write(
        &path,
        r#"{"elements":["a","b","c"],"covers":[["a","c"],["b","c"]]}"#,
    )
    .unwrap();
    let selector = format!("file:{}", path.display());
    assert_eq!(
        stdout(&["mobius", "a", "c", "--poset", &selector]).trim(),
        "mu=-1"
    );
    std::fs::write(
        &path,
        r#"{"elements":["a","b"],"covers":[["a","b"],["b","a"]]}"#,
    )
    .unwrap();
    assert_eq!(
        composet(&["mobius", "a", "b", "--poset", &selector])
            .status
            .code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}
