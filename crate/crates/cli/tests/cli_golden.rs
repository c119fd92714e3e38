use std::io::Cursor;
use std::process::Command;

use proptest::prelude::*;

use riccati_cli::commands::{run, Outcome};
use riccati_cli::json::{emit_json, poly_report, trig_report, ReportDoc};
use riccati_cli::parse::{parse_poly_expr, parse_trig_expr};
use riccati_core::qpoly::{frac, Poly};
use riccati_core::riccati_poly::gen_extremal;
use riccati_core::riccati_trig::gen_extremal_trig;
use riccati_core::trigring::TrigPoly;

const FIXTURE: [&str; 6] = ["--a", "5sin(t)+8sin(2t)+5sin(3t)", "--b1", "2+6cos(t)+18cos(2t)+10cos(3t)", "--b2", "-1"];

fn call(args: &[&str]) -> Outcome {
    let argv = std::iter::once("riccati").chain(args.iter().copied());
    run(argv, &mut std::io::empty())
}

fn call_stdin(args: &[&str], input: &str) -> Outcome {
    let argv = std::iter::once("riccati").chain(args.iter().copied());
    run(argv, &mut Cursor::new(input.as_bytes().to_vec()))
}

#[test]
fn solve_trig_fixture_lists_six() {
    let mut args = vec!["solve-trig"];
    args.extend(FIXTURE);
    let out = call(&args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let doc: ReportDoc = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc.count, 6);
    assert!(doc.bound_ok && doc.complete_over_rationals);
    assert_eq!(doc.solutions.last().unwrap().text, "10 + 16*cos(t) + 10*cos(2t)");
    assert!(doc.timing_ms.is_none());
}

#[test]
fn output_is_deterministic() {
    let mut args = vec!["solve-trig"];
    args.extend(FIXTURE);
    assert_eq!(call(&args), call(&args));
    let fuzz = ["fuzz", "--count", "40", "--max-eta", "3", "--seed", "7"];
    assert_eq!(call(&fuzz), call(&fuzz));
}

#[test]
fn timing_is_opt_in() {
    let out = call(&["solve-poly", "--a", "x", "--b1", "1", "--b2", "1", "--timing"]);
    let doc: ReportDoc = serde_json::from_str(&out.stdout).unwrap();
    assert!(doc.timing_ms.is_some());
}

#[test]
fn gen_extremal_poly_golden() {
    let out = call(&["gen-extremal-poly", "--eta", "4", "--j", "5", "--roots", "1,2,3,4"]);
    assert_eq!(out.code, 0);
    let doc: ReportDoc = serde_json::from_str(&out.stdout).unwrap();
    let texts: Vec<&str> = doc.solutions.iter().map(|s| s.text.as_str()).collect();
    assert_eq!(
        texts,
        ["0", "x^3 - 9*x^2 + 26*x - 24", "x^3 - 8*x^2 + 19*x - 12", "x^3 - 7*x^2 + 14*x - 8", "x^3 - 6*x^2 + 11*x - 6"]
    );
    assert!(doc.solutions.iter().all(|s| s.provenance == "seeded"));
}

#[test]
fn gen_extremal_trig_defaults() {
    let out = call(&["gen-extremal-trig", "--eta", "3", "--k", "3"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let doc: ReportDoc = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc.count, 6);
    assert_eq!(doc.count_bound, 6);
}

#[test]
fn verify_and_cross_ratio() {
    let out = call(&["verify", "--kind", "trig", "--a", "sin(t)", "--b1", "2cos(t)", "--b2", "-1", "--y", "1+cos(t)"]);
    assert!(out.stdout.contains("\"valid\": true"), "{}", out.stdout);
    let out = call(&["verify", "--kind", "poly", "--a", "x", "--b1", "1", "--b2", "1", "--y", "x"]);
    assert!(out.stdout.contains("\"valid\": false"));

    let out = call(&[
        "cross-ratio",
        "--kind",
        "poly",
        "--y",
        "0",
        "--y",
        "x^2-5x+6",
        "--y",
        "x^2-4x+3",
        "--y",
        "x^2-3x+2",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("\"cross_ratio\": \"1/2\""), "{}", out.stdout);
}

#[test]
fn stdin_spec_matches_flags() {
    let spec = r#"{"kind":"poly","a":["0","1"],"b1":"1-x","b2":["1"]}"#;
    let from_stdin = call_stdin(&["solve-poly", "--stdin"], spec);
    let from_flags = call(&["solve-poly", "--a", "x", "--b1", "1-x", "--b2", "1"]);
    assert_eq!(from_stdin.code, 0, "{}", from_stdin.stderr);
    assert_eq!(from_stdin.stdout, from_flags.stdout);
}

#[test]
fn sample_csv_shape() {
    let mut args = vec!["sample", "--n", "361"];
    args.extend(FIXTURE);
    let out = call(&args);
    assert_eq!(out.code, 0);
    let rows: Vec<&str> = out.stdout.split("\r\n").filter(|r| !r.is_empty()).collect();
    assert_eq!(rows.len(), 362);
    assert_eq!(rows[0], "theta,A,Y1,Y2,Y3,Y4,Y5,Y6");
    assert_eq!(rows[1].split(',').count(), 8);
    assert_eq!(rows[1].split(',').last(), Some("36"));
    assert!(rows[361].starts_with("6.28318530718,"));
}

#[test]
fn exit_codes() {
    // unreadable expression names the field and offset
    let out = call(&["solve-poly", "--a", "x", "--b1", "x^^2", "--b2", "1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("b1: syntax error at byte 2"), "{}", out.stderr);
    let out = call(&["solve-trig", "--a", "cos(1.5t)", "--b2", "1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("a: "));
    let out = call_stdin(&["solve-poly", "--stdin"], "{not json");
    assert_eq!(out.code, 2);
    let out = call(&["solve-poly", "--b2", "1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("a: missing"));
    let out = call(&["no-such-command"]);
    assert_eq!(out.code, 2);

    // domain errors
    let out = call(&["solve-poly", "--a", "x", "--b1", "1", "--b2", "0"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("linear"));
    let out = call(&["solve-poly", "--a", "0", "--b2", "1"]);
    assert_eq!(out.code, 1);
    let mut args = vec!["sample", "--n", "1"];
    args.extend(FIXTURE);
    let out = call(&args);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("at least two points"));
    let out = call(&["gen-extremal-poly", "--eta", "2", "--j", "4", "--roots", "1,2,3"]);
    assert_eq!(out.code, 1);
    let out = call(&["cross-ratio", "--kind", "poly", "--y", "0", "--y", "1", "--y", "1", "--y", "x"]);
    assert_eq!(out.code, 1);

    let out = call(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("solve-poly"));
}

#[test]
fn fuzz_env_seed_fallback() {
    let bin = env!("CARGO_BIN_EXE_riccati");
    let run_with = |seed: &str| {
        Command::new(bin)
            .args(["fuzz", "--count", "20", "--max-eta", "2"])
            .env("RICCATI_FUZZ_SEED", seed)
            .output()
            .unwrap()
    };
    let a = run_with("5");
    assert!(a.status.success());
    let text = String::from_utf8(a.stdout.clone()).unwrap();
    assert!(text.contains("\"seed\": 5") && text.contains("0 violations"), "{text}");
    assert_eq!(a.stdout, run_with("5").stdout);
    assert_eq!(run_with("x").status.code(), Some(2));
}

fn small_rational() -> impl Strategy<Value = riccati_core::qpoly::Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

fn any_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..7).prop_map(Poly::from_coeffs)
}

fn any_trig() -> impl Strategy<Value = TrigPoly> {
    (small_rational(), prop::collection::vec(small_rational(), 0..5), prop::collection::vec(small_rational(), 0..5))
        .prop_map(|(a0, c, s)| TrigPoly::new(a0, c, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn poly_print_parse(p in any_poly()) {
        prop_assert_eq!(parse_poly_expr(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn trig_print_parse(t in any_trig()) {
        prop_assert_eq!(parse_trig_expr(&t.to_string()).unwrap(), t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn report_json_round_trip(eta in 1usize..4, pick in 0usize..8, shift in -3i64..3) {
        let j = 2 + pick % eta;
        let roots: Vec<_> = (0..j as i64 - 1).map(|i| frac(3 * i + shift, 2)).collect();
        let (eq, set) = gen_extremal(eta, j, &roots).unwrap();
        let doc = poly_report(&eq, &set);
        prop_assert_eq!(serde_json::from_str::<ReportDoc>(&emit_json(&doc)).unwrap(), doc);

        let teta = eta + 1;
        let k = 1 + pick % (2 * teta - 3);
        let cs: Vec<_> = (0..k as i64).map(|i| frac(i + 2, 1 + (i % 3))).collect();
        let (teq, tset) = gen_extremal_trig(teta, &cs, &frac(shift - 10, 3), &frac(-1, 1)).unwrap();
        let tdoc = trig_report(&teq, &tset);
        prop_assert_eq!(serde_json::from_str::<ReportDoc>(&emit_json(&tdoc)).unwrap(), tdoc);
    }
}
