use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_polylog-apery"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "{stderr}");
    serde_json::from_str(&stdout).unwrap()
}

fn strings(v: &Value, key: &str) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| r[key].as_str().unwrap_or("null").to_string())
        .collect()
}

#[test]
fn log_dilog_table() {
    let v = json(&["compute", "--construction", "log-dilog", "--z", "-1", "--n", "2"]);
    assert_eq!(strings(&v, "a"), ["1", "5", "55"]);
    assert_eq!(strings(&v, "b"), ["0", "-7/2", "-305/8"]);
    assert_eq!(strings(&v, "b_tilde"), ["0", "-4", "-181/4"]);
    assert!(v[1]["b_tilde2"].is_null());
    assert_eq!(v[1]["r"], "3.4264097200273452914e-2");
}

#[test]
fn well_poised_table_and_trivial_trilog_row() {
    let v = json(&["compute", "--construction", "well-poised", "--n", "2"]);
    assert_eq!(strings(&v, "a"), ["1", "8", "264"]);
    let v = json(&["compute", "--construction", "trilog", "--n", "0", "--z", "1/2"]);
    assert_eq!(v.as_array().unwrap().len(), 1);
    for k in ["b", "b_tilde", "b_tilde2"] {
        assert_eq!(v[0][k], "0");
    }
    assert_eq!(v[0]["a"], "1");
}

#[test]
fn theorem_mode_trilog_has_no_b() {
    let v = json(&["compute", "--construction", "trilog", "--n", "2", "--digits", "5"]);
    assert_eq!(strings(&v, "a"), ["1", "7", "163"]);
    assert_eq!(strings(&v, "b_tilde2"), ["0", "17/2", "3135/16"]);
    assert!(v[2]["b"].is_null() && v[2]["r"].is_null());
    assert_eq!(v[2]["r_tilde"], "-7.4710e-4");
}

#[test]
fn csv_output_to_file() {
    let dir = std::env::temp_dir().join(format!("polylog-apery-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.csv");
    let (code, stdout, _) = run(&[
        "compute", "--construction", "well-poised", "--n", "1", "--format", "csv", "--digits", "4",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "a,b,b_tilde,b_tilde2,construction,n,r,r_tilde,r_tilde2,z");
    assert_eq!(lines[2], "8,13/2,29/2,,well-poised,1,7.974e-2,-7.532e-2,,-1");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["compute", "--construction", "trilog", "--z", "-1/2", "--n", "4"];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn invalid_configurations_exit_nonzero() {
    for args in [
        &["compute", "--construction", "log-dilog", "--n", "2"][..],
        &["compute", "--construction", "well-poised", "--z", "-1", "--n", "2"],
        &["compute", "--construction", "log-dilog", "--z", "2", "--n", "2"],
        &["compute", "--construction", "log-dilog", "--z", "1", "--n", "2"],
        &["verify", "--suite", "everything", "--max-n", "3"],
    ] {
        let (code, _, _) = run(args);
        assert_ne!(code, 0, "{args:?}");
    }
}

#[test]
fn verify_suites_pass() {
    for (suite, n) in [("recurrences", "40"), ("identities", "30"), ("integrality", "50")] {
        let v = json(&["verify", "--suite", suite, "--max-n", n]);
        assert_eq!(v["pass"], true, "{suite}");
        assert!(v["checks"].as_array().unwrap().iter().any(|c| c["strict"] == true));
    }
}

#[test]
fn verify_reports_informational_counterexamples() {
    let v = json(&["verify", "--suite", "integrality", "--max-n", "4"]);
    let c = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"].as_str().unwrap().contains("D_n^3 b_tilde2"))
        .unwrap();
    assert_eq!(c["pass"], false);
    assert_eq!(c["strict"], false);
    assert_eq!(c["failure"], "n=1");
}

#[test]
fn digits_reach_requested_accuracy() {
    for (c, d) in [("zeta2", "10"), ("log2", "10"), ("zeta3", "5"), ("pi2_12", "12")] {
        let v = json(&["digits", "--constant", c, "--digits", d]);
        assert_eq!(v["pass"], true);
        let err: f64 = v["error"].as_str().unwrap().parse().unwrap();
        assert!(err < 10f64.powi(-d.parse::<i32>().unwrap()), "{c}");
    }
    let v = json(&["digits", "--constant", "zeta3", "--digits", "5"]);
    assert_eq!(v["recurrence"], "thm3");
    let z2 = json(&["digits", "--constant", "zeta2", "--digits", "5"]);
    assert!(v["n"].as_u64() > z2["n"].as_u64());
}

#[test]
fn roots_of_theorem_polynomials() {
    let v = json(&["roots", "--recurrence", "thm3", "--digits", "12"]);
    assert_eq!(v["roots"][0]["modulus"], "1.01341498050e2");
    assert_eq!(v["roots"][1]["modulus"], "5.16164607198e-1");
    assert_eq!(v["roots"][1]["modulus"], v["roots"][2]["modulus"]);
    let m: f64 = v["roots"][1]["modulus"].as_str().unwrap().parse().unwrap();
    assert!((m - 0.51616460).abs() < 1e-8);
}

#[test]
fn recurrence_dump_is_loadable() {
    let v = json(&["dump-recurrence", "--recurrence", "thm2"]);
    let rec = polylog_apery::recio::recurrence_from_json(&v).unwrap();
    assert_eq!(rec, polylog_core::recur::builtin(polylog_core::Builtin::Thm2));
}
