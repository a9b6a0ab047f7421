use std::process::{Command, Output};

use ciqh_core::certifier::{Certificate, Verdict};

fn ciqh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ciqh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn certify_json_is_a_certificate() {
    let o = ciqh(&["certify", "-n", "5", "-d", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let cert: Certificate = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(cert.verdict, Verdict::CertifiedGenericSemisimple);
    let again: Certificate = serde_json::from_str(&serde_json::to_string(&cert).unwrap()).unwrap();
    assert_eq!(again, cert);
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&ciqh(&["certify", "-n", "9", "-d", "3,2"]));
    let cert: Certificate =
        serde_json::from_slice(&ciqh(&["certify", "-n", "9", "-d", "3,2", "--json"]).stdout).unwrap();
    let det = cert.det_linear_coeff.unwrap();
    assert!(text.contains(&format!("det-linear  {}/{}", det.num, det.den)), "{text}");
    assert!(text.contains(&format!("(d*l0 = {})", cert.line_count.unwrap())));
    assert!(text.contains(cert.verdict.as_str()));

    let text = stdout(&ciqh(&["lines", "-n", "4", "-d", "3", "-j", "0"]));
    let json: serde_json::Value =
        serde_json::from_slice(&ciqh(&["lines", "-n", "4", "-d", "3", "--json"]).stdout).unwrap();
    assert!(text.contains(&format!("d*l0 = {}", json["count"].as_str().unwrap())), "{text}");
    assert_eq!(json["count"], "18");
}

#[test]
fn every_verdict_exits_zero() {
    for (n, d, verdict) in [
        ("5", "3", "CERTIFIED_GENERIC_SEMISIMPLE"),
        ("7", "3", "INCONCLUSIVE_EXCEPTION"),
        ("4", "2", "SEMISIMPLE_AT_ORIGIN"),
        ("3", "3", "HYPOTHESIS_FAIL"),
    ] {
        let o = ciqh(&["certify", "-n", n, "-d", d]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains(verdict));
    }
}

#[test]
fn invalid_input_exits_one() {
    for args in [
        &["certify", "-n", "0", "-d", "3"][..],
        &["certify", "-n", "5", "-d", "0"],
        &["certify", "-n", "five", "-d", "3"],
        &["certify", "-n", "5"],
        &["frobnicate"],
        &["lines", "-n", "4", "-d", "3", "-j", "9"],
        &["oracle", "-n", "7", "-d", "3", "--samples", "2"],
        &["sweep", "--deg-max", "1"],
    ] {
        let o = ciqh(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(ciqh(&["--help"]).status.code(), Some(0));
}

#[test]
fn linear_factors_warn_and_reduce() {
    let o = ciqh(&["certify", "-n", "5", "-d", "1,3", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("dropped 1 linear factor"));
    assert_eq!(stdout(&o), stdout(&ciqh(&["certify", "-n", "5", "-d", "3", "--csv"])));
}

#[test]
fn sweep_csv_rows_are_exact_and_ordered() {
    let o = ciqh(&["sweep", "--n-max", "8", "--deg-max", "3", "--r-max", "2", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["n", "degrees", "r", "d", "e", "delta", "l0", "det_linear_coeff", "verdict"]);
    let rows: Vec<ciqh_cli::CsvRow> = reader.deserialize().map(Result::unwrap).collect();
    let keys: Vec<(u32, Vec<u32>)> =
        rows.iter().map(|r| (r.n, r.degrees.split(';').map(|d| d.parse().unwrap()).collect())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let cubic = rows.iter().find(|r| r.n == 5 && r.degrees == "3").unwrap();
    assert_eq!((cubic.delta.as_str(), cubic.l0.as_str(), cubic.det_linear_coeff.as_str()), ("1/2", "6/1", "-18/1"));
}

#[test]
fn charpoly_and_oracle_reports() {
    let o = ciqh(&["charpoly", "-n", "6", "-d", "2,2"]);
    assert!(stdout(&o).contains("λ^7 - 16λ^2"));
    let o = ciqh(&["oracle", "-n", "5", "-d", "3", "--samples", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["successes"], 3);
    assert_eq!(v["seed"], ciqh_core::certifier::DEFAULT_SEED);
}
