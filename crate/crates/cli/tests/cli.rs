use std::process::{Command, Output};

use serde_json::Value;

fn lucaskit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lucaskit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn lucasnomial_pretty() {
    let out = lucaskit(&["lucasnomial", "--n", "4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "s^4 + 3*s^2*t + 2*t^2\n");
}

#[test]
fn catalan_zero_is_one() {
    let out = lucaskit(&["catalan", "--n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn out_of_range_lucasnomial_is_zero() {
    assert_eq!(stdout(&lucaskit(&["lucasnomial", "--n", "4", "--k", "-1"])), "0\n");
    assert_eq!(stdout(&lucaskit(&["lucasnomial", "--n", "4", "--k", "5"])), "0\n");
}

#[test]
fn json_round_trips_to_the_same_pretty_form() {
    let pretty = stdout(&lucaskit(&["catalan", "--n", "3"]));
    let json = stdout(&lucaskit(&["catalan", "--n", "3", "--format", "json"]));
    let p = lucaskit::Poly2::from_json(&json).unwrap();
    assert_eq!(format!("{p}\n"), pretty);
}

#[test]
fn csv_lists_coefficients() {
    let out = lucaskit(&["lucasnomial", "--n", "4", "--k", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), "k,a_k\n0,1\n1,3\n2,2\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "coxeter", "--max-rank", "3", "--max-m", "5", "--max-k", "1", "--format", "json"];
    assert_eq!(stdout(&lucaskit(&args)), stdout(&lucaskit(&args)));
}

#[test]
fn writes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.json");
    let out = lucaskit(&["catalan", "--n", "4", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let p = lucaskit::Poly2::from_json(&text).unwrap();
    assert_eq!(p.eval_i64(2, -1), 14.into());
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(lucaskit(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(lucaskit(&["lucas"]).status.code(), Some(1));
    assert_eq!(lucaskit(&["lucas", "--n", "x"]).status.code(), Some(1));
    assert_eq!(lucaskit(&["coxeter", "--type", "D", "--n", "2"]).status.code(), Some(1));
    assert_eq!(lucaskit(&["rational", "--a", "2", "--b", "4"]).status.code(), Some(1));
    assert_eq!(lucaskit(&["lucas", "--n", "3", "--format", "svg"]).status.code(), Some(1));
    let out = lucaskit(&["frobnicate"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(lucaskit(&["--help"]).status.code(), Some(0));
    assert_eq!(lucaskit(&["--version"]).status.code(), Some(0));
    assert_eq!(lucaskit(&["verify", "--help"]).status.code(), Some(0));
}

#[test]
fn verify_involution_small_type() {
    let out = lucaskit(&["verify", "involution", "--n", "4", "--k", "2", "--r", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));
    let out = lucaskit(&["involution", "verify", "--n", "4", "--k", "2", "--r", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["passed"], true);
}

#[test]
fn verify_targets_pass_at_small_bounds() {
    let cases: &[&[&str]] = &[
        &["verify", "recursion", "--max-n", "6"],
        &["verify", "symmetry", "--max-n", "5"],
        &["verify", "catalan-id", "--max-n", "4"],
        &["verify", "fuss-id", "--max-n", "3", "--max-k", "2"],
        &["verify", "catD", "--max-n", "4"],
        &["verify", "genCatD", "--max-md", "4", "--max-n", "3"],
        &["verify", "hoggatt-long", "--max", "8"],
        &["verify", "gcd-lemma", "--max", "6"],
        &["verify", "cheby", "--max-n", "10"],
        &["verify", "narayana", "--max-n", "8"],
        &["verify", "rational", "--max", "6"],
        &["verify", "coxeter", "--max-rank", "3", "--max-m", "5", "--max-k", "1"],
    ];
    for args in cases {
        let out = lucaskit(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stdout(&out));
    }
}

#[test]
fn findings_as_json_lines() {
    let out = lucaskit(&["verify", "narayana", "--max-n", "4", "--format", "csv"]);
    let lines: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|v| v["status"] == "pass" && v["op"].is_string()));
}

#[test]
fn involution_apply_reports_the_case_trace() {
    let path = data("ext_752.json");
    let out = lucaskit(&["involution", "apply", "--input", &path]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("trace: dcbacdd"));
    assert!(text.contains("output type (7,4,2)"));

    let out = lucaskit(&["involution", "apply", "--input", &path, "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["output"]["B"]["path"], "WNNWNNNWNWN");
    assert_eq!(v["output"]["strips"], serde_json::json!([["D", "M"], ["M", "M"]]));

    // applying it to its own output returns the input
    let back = v["output"].to_string();
    let out = lucaskit(&["involution", "apply", "--input", &back, "--format", "json"]);
    let w: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let original: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(w["output"]["strips"], original["strips"]);
    assert_eq!(w["output"]["B"]["path"], original["B"]["path"]);
}

#[test]
fn involution_apply_rejects_bad_input() {
    let out = lucaskit(&["involution", "apply", "--input", "{\"B\": 3}"]);
    assert_eq!(out.status.code(), Some(1));
    let out = lucaskit(&["involution", "apply", "--input", "/no/such/file.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tilings_enumerate_counts() {
    let out = lucaskit(&["tilings", "enumerate", "--shape", "delta:5", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    // rows 4, 3, 2, 1 have 5, 3, 2, 1 tilings
    assert_eq!(v["count"], 30);
    let out = lucaskit(&["tilings", "enumerate", "--shape", "delta:5", "--limit", "2"]);
    assert_eq!(stdout(&out).lines().count(), 3);
}

#[test]
fn tilings_partition_passes() {
    for v in ["binomial:5:2", "catalan:3", "fuss:2:2", "ddiv:3:1:2"] {
        let out = lucaskit(&["tilings", "partition", "--variant", v]);
        assert_eq!(out.status.code(), Some(0), "{v}: {}", stdout(&out));
    }
    let out = lucaskit(&["tilings", "partition", "--variant", "binomial:4:2", "--list", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["partials"].as_array().unwrap().len(), v["blocks"].as_u64().unwrap() as usize);
    assert_eq!(lucaskit(&["tilings", "partition", "--variant", "binomial:2:5"]).status.code(), Some(1));
}

#[test]
fn tilings_render_ascii_and_svg() {
    let args = ["tilings", "render", "--variant", "binomial:5:2", "--tiling", "DMM/MMM/D/M"];
    let ascii = stdout(&lucaskit(&args));
    assert!(ascii.contains("o---o") && ascii.contains('#'));
    let mut svg_args = args.to_vec();
    svg_args.extend(["--format", "svg"]);
    let svg = stdout(&lucaskit(&svg_args));
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    let out = lucaskit(&["tilings", "render", "--shape", "delta:3", "--tiling", "D/M"]);
    assert_eq!(out.status.code(), Some(0));
    let out = lucaskit(&["tilings", "render", "--shape", "delta:3", "--tiling", "M/M"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_reports_properties() {
    let out = lucaskit(&["analyze", "--expr", "lucasnomial:6:3", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["real_rooted"], true);
    assert_eq!(v["log_concave"], true);
    assert_eq!(v["unimodal"], true);
    let out = lucaskit(&["analyze", "--expr", "catalan:3", "--expr", "coxeter:E6", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(lucaskit(&["analyze", "--expr", "bogus:1"]).status.code(), Some(1));
}

#[test]
fn coxeter_variants() {
    let h3 = lucaskit(&["coxeter", "--type", "H3", "--format", "json"]);
    let p = lucaskit::Poly2::from_json(&stdout(&h3)).unwrap();
    assert_eq!(p.eval_i64(2, -1), 32.into());
    let i2 = lucaskit(&["coxeter", "--type", "I2", "--m", "5", "--format", "json"]);
    let p = lucaskit::Poly2::from_json(&stdout(&i2)).unwrap();
    // degrees 2 and m with h = m give (m + 2)(2m) / (2m) = m + 2
    assert_eq!(p.eval_i64(2, -1), 7.into());
    assert_eq!(lucaskit(&["coxeter", "--type", "B", "--n", "3", "--fuss-k", "2"]).status.code(), Some(0));
}
