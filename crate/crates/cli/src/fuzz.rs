//! Seeded random equations for checking the count and degree bounds.
//!
//! Four generators per family: fully random coefficients, random with
//! `b0 = 0`, random with a planted solution, and a many-solution
//! structured family shifted by a planted solution. Planted solutions must
//! be recovered whenever the search reports itself complete.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use riccati_core::qpoly::{rat, Poly, Rational};
use riccati_core::riccati_poly::{solve_all, RiccatiEq};
use riccati_core::riccati_trig::{gen_extremal_trig, solve_all_trig, TrigRiccatiEq};
use riccati_core::trigring::TrigPoly;
use riccati_core::Error;

pub const SEED_ENV: &str = "RICCATI_FUZZ_SEED";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub kind: String,
    pub cases: usize,
    pub seed: u64,
    pub solutions_checked: usize,
    pub incomplete_searches: usize,
    pub planted_recovered: usize,
    pub violations: Vec<String>,
    pub summary: String,
}

fn small(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-3..=3)
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, nonzero: bool) -> Poly {
    loop {
        let d = rng.gen_range(0..=max_deg);
        let coeffs: Vec<i64> = (0..=d).map(|_| if rng.gen_bool(0.6) { small(rng) } else { 0 }).collect();
        let p = Poly::from_i64(&coeffs);
        if !nonzero || !p.is_zero() {
            return p;
        }
    }
}

/// The equation for `y = w + y0` from a `b0 = 0` equation in `w`.
fn shift_poly(a: &Poly, b1: &Poly, b2: &Poly, y0: &Poly) -> RiccatiEq {
    let nb1 = b1 - &(b2 * y0).scale(&rat(2));
    let nb0 = &(&(a * &y0.derivative()) - &(&nb1 * y0)) - &(b2 * &(y0 * y0));
    RiccatiEq::new(a.clone(), nb0, nb1, b2.clone()).expect("a and b2 nonzero")
}

pub fn random_poly_eq(rng: &mut ChaCha8Rng, max_eta: usize) -> (RiccatiEq, Option<Poly>) {
    let eta = rng.gen_range(0..=max_eta);
    let a = random_poly(rng, eta, true);
    let b1 = random_poly(rng, eta, false);
    let b2 = random_poly(rng, eta, true);
    let bound = eta - b2.deg().min(eta);
    match rng.gen_range(0..4) {
        0 => {
            let b0 = random_poly(rng, eta, false);
            (RiccatiEq::new(a, b0, b1, b2).expect("nonzero"), None)
        }
        1 => (RiccatiEq::new(a, Poly::zero(), b1, b2).expect("nonzero"), None),
        2 => {
            let y0 = random_poly(rng, bound, false);
            let eq = shift_poly(&a, &b1, &b2, &y0);
            if eq.eta() <= max_eta {
                return (eq, Some(y0));
            }
            let y0 = Poly::from_i64(&[small(rng)]);
            (shift_poly(&a, &b1, &b2, &y0), Some(y0))
        }
        _ => {
            // a with distinct integer roots, b1 = a': eta + 1 solutions before shifting
            let eta = eta.max(1);
            let mut roots: Vec<i64> = (-4..=4).collect();
            roots.shuffle(rng);
            let lead = [1, -1, 2][rng.gen_range(0..3)];
            let a = roots[..eta].iter().fold(Poly::from_i64(&[lead]), |acc, &r| &acc * &Poly::from_i64(&[-r, 1]));
            let b2 = Poly::from_i64(&[[1, -1, 2][rng.gen_range(0..3)]]);
            let y0 = random_poly(rng, 1, false);
            let eq = shift_poly(&a, &a.derivative(), &b2, &y0);
            if eq.eta() <= max_eta {
                return (eq, Some(y0));
            }
            let y0 = Poly::from_i64(&[small(rng)]);
            (shift_poly(&a, &a.derivative(), &b2, &y0), Some(y0))
        }
    }
}

fn random_trig(rng: &mut ChaCha8Rng, max_deg: usize, nonzero: bool) -> TrigPoly {
    loop {
        let d = rng.gen_range(0..=max_deg);
        let mut pick = || if rng.gen_bool(0.5) { small(rng) } else { 0 };
        let a0 = pick();
        let cos: Vec<i64> = (0..d).map(|_| pick()).collect();
        let sin: Vec<i64> = (0..d).map(|_| pick()).collect();
        let t = TrigPoly::from_i64(a0, &cos, &sin);
        if !nonzero || !t.is_zero() {
            return t;
        }
    }
}

fn shift_trig(a: &TrigPoly, b1: &TrigPoly, b2: &TrigPoly, y0: &TrigPoly) -> TrigRiccatiEq {
    let nb1 = b1 - &(b2 * y0).scale(&rat(2));
    let nb0 = &(&(a * &y0.derivative()) - &(&nb1 * y0)) - &(b2 * &(y0 * y0));
    TrigRiccatiEq::new(a.clone(), nb0, nb1, b2.clone()).expect("A and B2 nonzero")
}

pub fn random_trig_eq(rng: &mut ChaCha8Rng, max_eta: usize) -> (TrigRiccatiEq, Option<TrigPoly>) {
    let eta = rng.gen_range(0..=max_eta);
    let a = random_trig(rng, eta, true);
    let b1 = random_trig(rng, eta, false);
    let b2 = random_trig(rng, eta, true);
    let bound = eta - b2.degree().min(eta);
    let shifted = |rng: &mut ChaCha8Rng, a: &TrigPoly, b1: &TrigPoly, b2: &TrigPoly, y0: TrigPoly| {
        let eq = shift_trig(a, b1, b2, &y0);
        if eq.eta() <= max_eta {
            return (eq, Some(y0));
        }
        let y0 = TrigPoly::constant(rat(small(rng)));
        (shift_trig(a, b1, b2, &y0), Some(y0))
    };
    match rng.gen_range(0..4) {
        0 => {
            let b0 = random_trig(rng, eta, false);
            (TrigRiccatiEq::new(a, b0, b1, b2).expect("nonzero"), None)
        }
        1 => (TrigRiccatiEq::new(a, TrigPoly::zero(), b1, b2).expect("nonzero"), None),
        2 => {
            let y0 = random_trig(rng, bound.min(1), false);
            shifted(rng, &a, &b1, &b2, y0)
        }
        _ if max_eta >= 2 => {
            let eta = rng.gen_range(2..=max_eta);
            let k = rng.gen_range(1..=2 * eta - 3);
            let mut pool: Vec<i64> = (-5..=5).collect();
            pool.shuffle(rng);
            let cs: Vec<Rational> = pool[..k].iter().map(|&c| rat(c)).collect();
            let (d1, d2) = (rat(pool[k]), rat(pool[k + 1]));
            let (eq, _) = gen_extremal_trig(eta, &cs, &d1, &d2).expect("distinct constants");
            let y0 = random_trig(rng, 1, false);
            shifted(rng, eq.a(), eq.b1(), eq.b2(), y0)
        }
        _ => (TrigRiccatiEq::new(a, TrigPoly::zero(), b1, b2).expect("nonzero"), None),
    }
}

fn finish(summary: &mut FuzzSummary) {
    summary.summary = format!("{} violations", summary.violations.len());
}

pub fn run_poly_fuzz(count: usize, max_eta: usize, seed: u64) -> FuzzSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = FuzzSummary { kind: "poly".into(), cases: count, seed, ..Default::default() };
    for case in 0..count {
        let (eq, planted) = random_poly_eq(&mut rng, max_eta);
        match solve_all(&eq, None) {
            Ok(set) => {
                if !set.complete_over_rationals() {
                    out.incomplete_searches += 1;
                }
                if set.len() > eq.count_bound() {
                    out.violations.push(format!("case {case}: {} solutions for {eq}", set.len()));
                }
                for e in set.entries() {
                    out.solutions_checked += 1;
                    if !eq.verify_solution(&e.poly) {
                        out.violations.push(format!("case {case}: {} does not solve {eq}", e.poly));
                    }
                    if e.poly.degree().map_or(false, |d| d > eq.degree_bound()) {
                        out.violations.push(format!("case {case}: {} exceeds the degree bound", e.poly));
                    }
                }
                if let Some(y0) = planted {
                    if set.contains(&y0) {
                        out.planted_recovered += 1;
                    } else if set.complete_over_rationals() {
                        out.violations.push(format!("case {case}: planted {y0} missed for {eq}"));
                    }
                }
            }
            Err(Error::BoundViolation { found, bound }) => {
                out.violations.push(format!("case {case}: bound violation {found} > {bound} for {eq}"))
            }
            Err(e) => out.violations.push(format!("case {case}: unexpected error {e} for {eq}")),
        }
    }
    finish(&mut out);
    out
}

pub fn run_trig_fuzz(count: usize, max_eta: usize, seed: u64) -> FuzzSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = FuzzSummary { kind: "trig".into(), cases: count, seed, ..Default::default() };
    for case in 0..count {
        let (eq, planted) = random_trig_eq(&mut rng, max_eta);
        match solve_all_trig(&eq, None) {
            Ok(set) => {
                if !set.complete_over_rationals() {
                    out.incomplete_searches += 1;
                }
                if set.len() > eq.count_bound() {
                    out.violations.push(format!("case {case}: {} solutions for {eq}", set.len()));
                }
                for e in set.entries() {
                    out.solutions_checked += 1;
                    if !eq.verify_solution(&e.trig) {
                        out.violations.push(format!("case {case}: {} does not solve {eq}", e.trig));
                    }
                    if e.trig.degree() > eq.degree_bound() {
                        out.violations.push(format!("case {case}: {} exceeds the degree bound", e.trig));
                    }
                }
                if let Some(y0) = planted {
                    if set.contains(&y0) {
                        out.planted_recovered += 1;
                    } else if set.complete_over_rationals() {
                        out.violations.push(format!("case {case}: planted {y0} missed for {eq}"));
                    }
                }
            }
            Err(Error::BoundViolation { found, bound }) => {
                out.violations.push(format!("case {case}: bound violation {found} > {bound} for {eq}"))
            }
            Err(e) => out.violations.push(format!("case {case}: unexpected error {e} for {eq}")),
        }
    }
    finish(&mut out);
    out
}
