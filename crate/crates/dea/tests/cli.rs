use dea::cli::run;
use dea::io::{parse_report_csv, parse_report_json};

fn dea(args: &[&str]) -> dea::cli::Outcome {
    run(std::iter::once("dea").chain(args.iter().copied()))
}

fn stdout(args: &[&str]) -> String {
    let out = dea(args);
    assert_eq!(out.code, 0, "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn super_for_yokohama() {
    let text = stdout(&["super", "--dmu", "The Bank of Yokohama"]);
    assert!(text.contains("0.720"), "{text}");
    assert!(text.contains("Resona Bank") && text.contains("Hokuyo Bank"));

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["super", "--dmu", "9", "--format", "json"])).unwrap();
    assert!((json["t_star"].as_f64().unwrap() - 0.720).abs() <= 1e-3);
    assert_eq!(json["v"][0].as_f64(), Some(0.0));
    assert_eq!(json["second_best"].as_array().unwrap().len(), 2);
}

#[test]
fn ccr_formats() {
    let text = stdout(&["ccr", "--dmu", "Mizuho Financial Group"]);
    assert!(text.contains("0.876"), "{text}");
    let csv = stdout(&["ccr", "--dmu", "1", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("name,theta,u1,u2,v1,v2,efficient"));
    assert!(lines
        .next()
        .unwrap()
        .starts_with("Mizuho Financial Group,0.87"));
}

#[test]
fn classify_reports_cell() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["classify", "--dmu", "9", "--format", "json"])).unwrap();
    assert_eq!(json["class"], "extreme-efficient");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["classify", "--dmu", "1", "--format", "json"])).unwrap();
    assert_eq!(json["class"], "inefficient");
    assert!(json["opt_s"].as_f64().unwrap() > 1.0);
}

#[test]
fn compare_with_printed_weights() {
    let csv = stdout(&[
        "compare",
        "--dmu",
        "9",
        "--u",
        "8.35e-5,3.83e-7",
        "--v",
        "0,4.83e-6",
        "--super-u",
        "3.28e-5,2.88e-6",
        "--super-v",
        "0,4.83e-6",
        "--format",
        "csv",
    ]);
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "name,ccr,super");
    assert_eq!(rows.len(), 22);
    let japan_post: Vec<&str> = rows[7].split(',').collect();
    assert_eq!(japan_post[0], "Japan Post Bank Co");
    assert!((japan_post[1].parse::<f64>().unwrap() - 0.054).abs() <= 1e-3);
    assert!((japan_post[2].parse::<f64>().unwrap() - 0.109).abs() <= 1e-3);

    let text = stdout(&["compare", "--dmu", "The Bank of Yokohama"]);
    assert!(text.contains("Super"));
}

#[test]
fn demo_banks_csv_has_every_bank() {
    let csv = stdout(&["demo-banks", "--format", "csv"]);
    let report = parse_report_csv(csv.as_bytes()).unwrap();
    assert_eq!(report.dmus.len(), 21);
    assert_eq!(report.efficient_count(), 8);
    let json = stdout(&["demo-banks", "--format", "json"]);
    let from_json = parse_report_json(json.as_bytes()).unwrap();
    assert_eq!(from_json.efficient_count(), 8);
    for (a, b) in from_json.dmus.iter().zip(&report.dmus) {
        assert_eq!((&a.name, &a.class), (&b.name, &b.class));
    }
    assert!(stdout(&["demo-banks"]).contains("CCR-efficient DMUs: 8 of 21"));
}

#[test]
fn unknown_dmu_lists_names() {
    let out = dea(&["ccr", "--dmu", "NoSuchBank"]);
    assert_eq!(out.code, 1);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("NoSuchBank") && err.contains("The Bank of Iwate"),
        "{err}"
    );
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dea(&["ccr", "--dmu", "1", "--bogus"]).code, 2);
    assert_eq!(dea(&["ccr"]).code, 2);
    assert_eq!(dea(&[]).code, 2);
    assert_eq!(dea(&["demo-banks", "--format", "xml"]).code, 2);
    assert_eq!(dea(&["demo-banks", "--tolerance", "-1"]).code, 2);
    assert_eq!(dea(&["compare", "--dmu", "1", "--u", "1,2"]).code, 2);
    let help = dea(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(String::from_utf8(help.stdout)
        .unwrap()
        .contains("demo-banks"));
}

#[test]
fn output_is_deterministic() {
    for format in ["text", "csv", "json"] {
        let a = dea(&["demo-banks", "--format", format]);
        let b = dea(&["demo-banks", "--format", format]);
        assert_eq!(a, b);
    }
}

#[test]
fn reads_panel_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("panel.csv");
    std::fs::write(&path, "id,name,in:x,out:y\n1,A,2,4\n2,B,1,1\n3,C,4,2\n").unwrap();
    let path = path.to_str().unwrap();
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "super", "--input", path, "--dmu", "A", "--format", "json",
    ]))
    .unwrap();
    // Ratios 2, 1, 0.5: A is efficient and B is second best at half its ratio.
    assert!((json["t_star"].as_f64().unwrap() - 0.5).abs() <= 1e-9);
    assert_eq!(json["second_best"][0], "B");

    std::fs::write(dir.path().join("bad.csv"), "id,name,in:x,out:y\n1,A,0,4\n").unwrap();
    let bad = dir.path().join("bad.csv");
    let out = dea(&["ccr", "--input", bad.to_str().unwrap(), "--dmu", "1"]);
    assert_eq!(out.code, 1);
    assert!(String::from_utf8(out.stderr).unwrap().contains("in:x"));
    assert_eq!(
        dea(&["ccr", "--input", "/nonexistent/panel.csv", "--dmu", "1"]).code,
        1
    );
}
