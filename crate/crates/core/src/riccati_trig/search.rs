//! Direct search for trigonometric-polynomial solutions through the x-side
//! template of [`TrigRiccatiEq::transport_to_x`].

use super::equation::TrigRiccatiEq;
use crate::error::{Error, Result};
use crate::qpoly::Poly;
use crate::riccati_poly::{method_a, sweep_solutions};
use crate::trigring::{phi_inverse, RatForm, TrigPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigSearchOutcome {
    /// Sorted canonically, deduplicated.
    pub solutions: Vec<TrigPoly>,
    pub complete: bool,
}

fn numerator_to_trig(w: &Poly, m: usize) -> TrigPoly {
    phi_inverse(&RatForm::reduced(w.clone(), m).expect("template solutions have degree at most 2m"))
}

fn collect(eq: &TrigRiccatiEq, ws: Vec<Poly>, m: usize) -> Vec<TrigPoly> {
    let mut out: Vec<TrigPoly> = ws
        .iter()
        .map(|w| numerator_to_trig(w, m))
        .filter(|y| {
            let ok = eq.verify_solution(y);
            debug_assert!(ok, "template solution fails in t: {y}");
            ok
        })
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out.dedup();
    out
}

/// Coefficient sweep on the template (Method B'), any equation.
pub fn trig_sweep_solutions(eq: &TrigRiccatiEq) -> TrigSearchOutcome {
    let m = eq.degree_bound();
    let outcome = sweep_solutions(&eq.transport_to_x(m), 2 * m);
    TrigSearchOutcome { solutions: collect(eq, outcome.solutions, m), complete: outcome.complete }
}

/// Divisor method on the template (Method A'), for reduced equations. The
/// template keeps `b0 = 0`, so every numerator is a constant times a product
/// of irreducible factors of its leading coefficient.
pub fn trig_method_a(eq: &TrigRiccatiEq) -> Result<Vec<TrigPoly>> {
    if !eq.is_reduced() {
        return Err(Error::NotASolution("0".into()));
    }
    let m = eq.degree_bound();
    let ws = method_a(&eq.transport_to_x(m), 2 * m)?;
    Ok(collect(eq, ws, m))
}

/// Two nonzero solutions of a reduced equation to seed the closure step,
/// preferring a pair of equal degree. Fewer are returned when fewer exist.
pub fn trig_base_solutions(eq_reduced: &TrigRiccatiEq) -> Result<TrigSearchOutcome> {
    let found = trig_method_a(eq_reduced)?;
    if found.len() < 2 {
        let sweep = trig_sweep_solutions(eq_reduced);
        debug_assert!(sweep.solutions.iter().all(|y| y.is_zero() || found.contains(y)));
    }
    Ok(TrigSearchOutcome { solutions: pick_pair(found), complete: true })
}

fn pick_pair(found: Vec<TrigPoly>) -> Vec<TrigPoly> {
    for i in 0..found.len() {
        for j in i + 1..found.len() {
            if found[i].degree() == found[j].degree() {
                return vec![found[i].clone(), found[j].clone()];
            }
        }
    }
    found.into_iter().take(2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a0: i64, cos: &[i64], sin: &[i64]) -> TrigPoly {
        TrigPoly::from_i64(a0, cos, sin)
    }

    #[test]
    fn eta_one_pair() {
        let eq = TrigRiccatiEq::new(t(0, &[], &[1]), TrigPoly::zero(), t(0, &[2], &[]), t(-1, &[], &[])).unwrap();
        let out = trig_base_solutions(&eq).unwrap();
        assert_eq!(out.solutions, vec![t(-1, &[1], &[]), t(1, &[1], &[])]);
        let sweep = trig_sweep_solutions(&eq);
        assert!(sweep.complete);
        assert_eq!(sweep.solutions.len(), 3);
    }

    #[test]
    fn pair_prefers_equal_degree() {
        let found = vec![t(1, &[], &[]), t(0, &[1], &[]), t(0, &[], &[1])];
        assert_eq!(pick_pair(found), vec![t(0, &[1], &[]), t(0, &[], &[1])]);
    }
}
