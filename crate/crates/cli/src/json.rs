//! JSON input specs and report documents.
//!
//! Rationals travel as `"p/q"` strings, polynomials as ascending coefficient
//! arrays, trigonometric polynomials as `{a0, cos, sin}`.

use serde::{Deserialize, Serialize};

use riccati_core::qpoly::{format_rational, parse_rational, Poly, Rational};
use riccati_core::riccati_poly::{Provenance, RiccatiEq, SolutionSet};
use riccati_core::riccati_trig::{TrigRiccatiEq, TrigSolutionSet};
use riccati_core::trigring::TrigPoly;

use crate::parse::{parse_poly_expr, parse_trig_expr, SyntaxError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Poly,
    Trig,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrigJson {
    pub a0: String,
    pub cos: Vec<String>,
    pub sin: Vec<String>,
}

/// A coefficient given as expression text or in structured form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffInput {
    Text(String),
    Coeffs(Vec<String>),
    Trig(TrigJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationSpec {
    pub kind: Kind,
    pub a: CoeffInput,
    #[serde(default)]
    pub b0: Option<CoeffInput>,
    pub b1: CoeffInput,
    pub b2: CoeffInput,
    #[serde(default)]
    pub seeds: Vec<CoeffInput>,
}

/// Why an input value could not be read, naming the field.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{field}: {message}")]
pub struct InputError {
    pub field: String,
    pub message: String,
}

impl InputError {
    fn new(field: &str, message: impl Into<String>) -> Self {
        InputError { field: field.to_string(), message: message.into() }
    }

    fn syntax(field: &str, e: SyntaxError) -> Self {
        InputError::new(field, e.to_string())
    }
}

fn rationals(field: &str, items: &[String]) -> Result<Vec<Rational>, InputError> {
    items
        .iter()
        .map(|s| parse_rational(s).ok_or_else(|| InputError::new(field, format!("'{s}' is not a rational number"))))
        .collect()
}

pub fn poly_from_input(field: &str, input: &CoeffInput) -> Result<Poly, InputError> {
    match input {
        CoeffInput::Text(src) => parse_poly_expr(src).map_err(|e| InputError::syntax(field, e)),
        CoeffInput::Coeffs(cs) => Ok(Poly::from_coeffs(rationals(field, cs)?)),
        CoeffInput::Trig(_) => Err(InputError::new(field, "expected a polynomial, got a trigonometric object")),
    }
}

pub fn trig_from_input(field: &str, input: &CoeffInput) -> Result<TrigPoly, InputError> {
    match input {
        CoeffInput::Text(src) => parse_trig_expr(src).map_err(|e| InputError::syntax(field, e)),
        CoeffInput::Trig(t) => {
            let a0 = rationals(field, std::slice::from_ref(&t.a0))?.remove(0);
            Ok(TrigPoly::new(a0, rationals(field, &t.cos)?, rationals(field, &t.sin)?))
        }
        CoeffInput::Coeffs(_) => Err(InputError::new(field, "expected a trigonometric object, got a coefficient array")),
    }
}

pub fn rational_json(r: &Rational) -> String {
    format_rational(r)
}

pub fn poly_json(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

pub fn trig_json(t: &TrigPoly) -> TrigJson {
    TrigJson {
        a0: format_rational(t.a0()),
        cos: t.cos_coeffs().iter().map(format_rational).collect(),
        sin: t.sin_coeffs().iter().map(format_rational).collect(),
    }
}

/// Exact value in a report: a coefficient array or a Fourier object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Poly(Vec<String>),
    Trig(TrigJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationJson {
    pub a: ValueJson,
    pub b0: ValueJson,
    pub b1: ValueJson,
    pub b2: ValueJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub value: ValueJson,
    pub text: String,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub kind: Kind,
    pub equation: EquationJson,
    pub eta: usize,
    pub degree_bound: usize,
    pub count_bound: usize,
    pub count: usize,
    pub bound_ok: bool,
    pub complete_over_rationals: bool,
    pub solutions: Vec<SolutionJson>,
    /// Only filled in on request, so that output stays byte-identical.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

fn provenance_json(p: &Provenance) -> (String, Option<String>) {
    match p {
        Provenance::Seeded => ("seeded".into(), None),
        Provenance::BaseSearch => ("base-search".into(), None),
        Provenance::Closure(c) => ("closure".into(), Some(format_rational(c))),
    }
}

pub fn poly_report(eq: &RiccatiEq, set: &SolutionSet) -> ReportDoc {
    let solutions: Vec<SolutionJson> = set
        .entries()
        .iter()
        .map(|e| {
            let (provenance, c) = provenance_json(&e.provenance);
            SolutionJson { value: ValueJson::Poly(poly_json(&e.poly)), text: e.poly.to_string(), provenance, c }
        })
        .collect();
    ReportDoc {
        kind: Kind::Poly,
        equation: EquationJson {
            a: ValueJson::Poly(poly_json(eq.a())),
            b0: ValueJson::Poly(poly_json(eq.b0())),
            b1: ValueJson::Poly(poly_json(eq.b1())),
            b2: ValueJson::Poly(poly_json(eq.b2())),
        },
        eta: eq.eta(),
        degree_bound: eq.degree_bound(),
        count_bound: eq.count_bound(),
        count: set.len(),
        bound_ok: set.len() <= eq.count_bound(),
        complete_over_rationals: set.complete_over_rationals(),
        solutions,
        timing_ms: None,
    }
}

pub fn trig_report(eq: &TrigRiccatiEq, set: &TrigSolutionSet) -> ReportDoc {
    let solutions: Vec<SolutionJson> = set
        .entries()
        .iter()
        .map(|e| {
            let (provenance, c) = provenance_json(&e.provenance);
            SolutionJson { value: ValueJson::Trig(trig_json(&e.trig)), text: e.trig.to_string(), provenance, c }
        })
        .collect();
    ReportDoc {
        kind: Kind::Trig,
        equation: EquationJson {
            a: ValueJson::Trig(trig_json(eq.a())),
            b0: ValueJson::Trig(trig_json(eq.b0())),
            b1: ValueJson::Trig(trig_json(eq.b1())),
            b2: ValueJson::Trig(trig_json(eq.b2())),
        },
        eta: eq.eta(),
        degree_bound: eq.degree_bound(),
        count_bound: eq.count_bound(),
        count: set.len(),
        bound_ok: set.len() <= eq.count_bound(),
        complete_over_rationals: set.complete_over_rationals(),
        solutions,
        timing_ms: None,
    }
}

pub fn emit_json(report: &ReportDoc) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use riccati_core::qpoly::frac;

    #[test]
    fn value_formats() {
        assert_eq!(poly_json(&Poly::from_i64(&[1, 0, 1])), vec!["1", "0", "1"]);
        assert_eq!(rational_json(&frac(-3, 2)), "-3/2");
    }

    #[test]
    fn spec_inputs() {
        let spec: EquationSpec = serde_json::from_str(
            r#"{"kind":"trig","a":"sin(t)","b1":{"a0":"0","cos":["2"],"sin":[]},"b2":"-1"}"#,
        )
        .unwrap();
        assert_eq!(spec.kind, Kind::Trig);
        assert!(spec.b0.is_none());
        assert_eq!(trig_from_input("b1", &spec.b1).unwrap(), TrigPoly::from_i64(0, &[2], &[]));
        let p: CoeffInput = serde_json::from_str(r#"["1","-3/2"]"#).unwrap();
        assert_eq!(poly_from_input("a", &p).unwrap(), Poly::from_coeffs(vec![frac(1, 1), frac(-3, 2)]));
        let bad: CoeffInput = serde_json::from_str(r#"["1","x"]"#).unwrap();
        assert_eq!(poly_from_input("a", &bad).unwrap_err().field, "a");
    }
}
