// Copyright 2026 the Cornu Authors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use cornu::lcg::{gradient_trace_from_csv, LcgTrace, LineRecord};
use cornu::lddc::LddcHistogram;
use cornu::profiles::profile_samples_from_csv;
use cornu::PlanarCurve;
use serde_json::Value;

fn cornu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cornu"))
        .args(args)
        .env_remove("CORNU_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn json_stdout(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn dir_arg(dir: &Path) -> String {
    dir.display().to_string()
}

#[test]
fn classify_log_spiral() {
    let v = json_stdout(&cornu(&["classify", "--gcs", "3,1,1,2"]));
    assert_eq!(v["degenerate"], "log_spiral");
    assert_eq!(v["class"], "log_aesthetic");
    assert!(v["lcg_line"]["A"].as_f64().unwrap().abs() < 1e-12);
    assert!((v["lcg_line"]["B"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn classify_clothoid_and_general() {
    let v = json_stdout(&cornu(&["classify", "--linear", "0,2,1"]));
    assert_eq!(v["degenerate"], "clothoid");
    assert_eq!(v["class"], "log_aesthetic");
    assert_eq!(v["lcg_line"]["B"].as_f64().unwrap(), -1.0);

    let v = json_stdout(&cornu(&["classify", "--gcs", "0,2,3.141592653589793,-0.5"]));
    assert_eq!(v["degenerate"], "general_gcs");
    assert_eq!(v["class"], "gcs");
    assert!(v["lcg_line"]["A"].as_f64().unwrap() > 0.0);
}

#[test]
fn classify_undefined_lcg() {
    for args in [
        &["classify", "--constant", "1.5", "--length", "2"][..],
        &["classify", "--gcs", "1,1,2,0.5"],
        &["classify", "--constant", "0", "--length", "2"],
    ] {
        let v = json_stdout(&cornu(args));
        assert_eq!(v["class"], "lcg_undefined", "{args:?}");
        assert!(v["lcg_line"].is_null());
        assert!(v["reason"].is_string());
    }
}

#[test]
fn classify_quadratic_uses_a_fit() {
    let v = json_stdout(&cornu(&["classify", "--quadratic", "0.5,0.2,2,1"]));
    assert!(v["lcg_line"]["A"].is_number());
    assert!(v["residual"].as_f64().unwrap() > 0.0);
}

#[test]
fn profile_json_inline_and_file() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"{"type":"gcs","kappa0":3.0,"kappa1":1.0,"arc_length":1.0,"r":2.0}"#;
    let inline = json_stdout(&cornu(&["classify", "--profile", text]));
    let path = dir.path().join("p.json");
    fs::write(&path, text).unwrap();
    let from_file = json_stdout(&cornu(&["classify", "--profile", &dir_arg(&path)]));
    assert_eq!(inline, from_file);
}

#[test]
fn bad_input_exits_2() {
    for args in [
        &["classify", "--gcs", "1,2,1,-1"][..],
        &["classify", "--gcs", "1,2,0,0"],
        &["classify", "--gcs", "1,2,3"],
        &["classify", "--gcs", "1,2,x,0"],
        &["classify", "--constant", "1"],
        &["classify", "--gcs", "1,2,1,0", "--linear", "0,1,1"],
        &["classify"],
        &["synth", "--linear", "0,1,1", "--abs-tol", "-1"],
        &["classify", "--profile", "/nonexistent/profile.json"],
        &["frobnicate"],
    ] {
        let out = cornu(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn quadrature_failure_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = cornu(&[
        "synth",
        "--linear",
        "0,400,2",
        "--max-subdivisions",
        "1",
        "--out-dir",
        &dir_arg(dir.path()),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("did not converge"));
}

#[test]
fn seed_check_passes() {
    let out = cornu(&["--seed-check"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn synth_writes_parseable_curve() {
    let dir = tempfile::tempdir().unwrap();
    let v = json_stdout(&cornu(&[
        "synth",
        "--linear",
        "0,2,1",
        "--pose",
        "1,-2,0.5",
        "--samples",
        "101",
        "--out-dir",
        &dir_arg(dir.path()),
    ]));
    let curve =
        PlanarCurve::from_csv(fs::File::open(dir.path().join("curve.csv")).unwrap()).unwrap();
    assert_eq!(curve.len(), 101);
    let end = curve.end_state();
    assert_eq!(v["endpoint"]["x"].as_f64().unwrap(), end.x);
    assert_eq!(v["endpoint"]["y"].as_f64().unwrap(), end.y);
    assert!(dir.path().join("curve.svg").exists());
    assert_eq!(curve.samples()[0].x, 1.0);
    assert_eq!(curve.samples()[0].y, -2.0);
}

#[test]
fn format_selects_outputs() {
    let dir = tempfile::tempdir().unwrap();
    json_stdout(&cornu(&[
        "synth",
        "--gcs",
        "0,2,3.14,1",
        "--format",
        "svg",
        "--out-dir",
        &dir_arg(dir.path()),
    ]));
    assert!(dir.path().join("curve.svg").exists());
    assert!(!dir.path().join("curve.csv").exists());
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_cornu"))
        .args(["lcg", "--gcs", "0.5,2,1,1"])
        .env("CORNU_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("lcg.csv").exists());
}

#[test]
fn lcg_gradient_lddc_outputs_parse_back() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir_arg(dir.path());
    let profile = ["--gcs", "0.5,2,3.141592653589793,2"];

    json_stdout(&cornu(
        &[&["lcg"][..], &profile, &["--out-dir", &d]].concat(),
    ));
    let points = LcgTrace::from_csv(fs::File::open(dir.path().join("lcg.csv")).unwrap()).unwrap();
    assert_eq!(points.len(), 256);

    json_stdout(&cornu(
        &[&["gradient"][..], &profile, &["--out-dir", &d]].concat(),
    ));
    let trace =
        gradient_trace_from_csv(fs::File::open(dir.path().join("gradient.csv")).unwrap()).unwrap();
    let record: LineRecord =
        serde_json::from_str(&fs::read_to_string(dir.path().join("gradient_line.json")).unwrap())
            .unwrap();
    let line = record.line();
    for p in &trace {
        assert!((p.gradient - line.eval(p.s)).abs() < 1e-10);
    }

    let v = json_stdout(&cornu(
        &[&["lddc"][..], &profile, &["--bins", "12", "--out-dir", &d]].concat(),
    ));
    let bins =
        LddcHistogram::bins_from_csv(fs::File::open(dir.path().join("lddc.csv")).unwrap()).unwrap();
    assert_eq!(bins.len(), 12);
    let total: f64 = bins.iter().map(|b| b.length).sum();
    assert!((total - std::f64::consts::PI).abs() < 1e-9);
    assert!(
        v["comparison"]["max_abs_length_deviation"]
            .as_f64()
            .unwrap()
            < 0.05
    );
    assert!(dir.path().join("lddc_vs_lcg.json").exists());
}

#[test]
fn sampled_gradient_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let v = json_stdout(&cornu(&[
        "gradient",
        "--gcs",
        "0.1,2,3.141592653589793,2",
        "--sampled",
        "--out-dir",
        &dir_arg(dir.path()),
    ]));
    assert!((v["line"]["A"].as_f64().unwrap() + 1.3179146164802564).abs() < 1e-3);
    assert!((v["line"]["B"].as_f64().unwrap() + 1.0701754385964912).abs() < 1e-3);
    assert_eq!(v["line"]["class"], "gcs");
}

#[test]
fn figures_are_complete_and_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        json_stdout(&cornu(&["figures", "--out-dir", &dir_arg(d.path())]));
    }
    let mut names: Vec<String> = fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.iter().filter(|n| n.ends_with(".csv")).count(), 33);
    for n in ["fig1.svg", "fig2.svg", "fig3.svg", "fig4.svg", "fig5.svg"] {
        assert!(names.iter().any(|x| x == n), "{n}");
    }
    for n in &names {
        assert_eq!(
            fs::read(a.path().join(n)).unwrap(),
            fs::read(b.path().join(n)).unwrap(),
            "{n}"
        );
    }

    for tag in ["100", "5", "2", "1", "0", "-0.5", "-0.9", "-0.99"] {
        let open =
            |kind: &str| fs::File::open(a.path().join(format!("fig{kind}_r{tag}.csv"))).unwrap();
        let kappa = profile_samples_from_csv(open("2_curvature")).unwrap();
        assert_eq!(kappa.len(), 257);
        assert_eq!(kappa[0].kappa, 0.0);
        assert!((kappa[256].kappa - 2.0).abs() < 1e-12);
        let curve = PlanarCurve::from_csv(open("3_curve")).unwrap();
        assert_eq!(curve.len(), 257);
        // κ0 = 0 makes the first grid point an inflection of the LCG
        assert_eq!(LcgTrace::from_csv(open("4_lcg")).unwrap().len(), 256);
        let gradient = gradient_trace_from_csv(open("5_gradient")).unwrap();
        assert_eq!(gradient.len(), 257);
        assert!((gradient[0].gradient + 1.0).abs() < 1e-12);
    }
    let svg = fs::read_to_string(a.path().join("fig5.svg")).unwrap();
    assert_eq!(svg.matches("stroke-dasharray").count(), 1);
}
