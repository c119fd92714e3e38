//! Closure from a seed pair and the full trigonometric pipeline. All
//! divisibility reasoning happens on the x-side, where it is well behaved;
//! every candidate is certified back in `t`.

use num_traits::{One, Zero};

use super::equation::{trig_count_bound, TrigRiccatiEq};
use super::search::{trig_base_solutions, trig_sweep_solutions};
use crate::error::{Error, Result};
use crate::qpoly::{factor_irreducible, residue_solve_unchecked, Poly, Rational};
use crate::riccati_poly::Provenance;
use crate::trigring::{phi_forward, phi_inverse, RatForm, TrigPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigSolution {
    pub trig: TrigPoly,
    /// `y(x) / (1+x^2)^deg` image of `trig`.
    pub form: RatForm,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigSolutionSet {
    entries: Vec<TrigSolution>,
    complete_over_rationals: bool,
}

fn rank(p: &Provenance) -> u8 {
    match p {
        Provenance::Seeded => 0,
        Provenance::BaseSearch => 1,
        Provenance::Closure(_) => 2,
    }
}

impl TrigSolutionSet {
    pub(crate) fn new(complete_over_rationals: bool) -> Self {
        TrigSolutionSet { entries: Vec::new(), complete_over_rationals }
    }

    pub(crate) fn insert(&mut self, trig: TrigPoly, provenance: Provenance) {
        match self.entries.binary_search_by(|e| e.trig.canonical_cmp(&trig)) {
            Ok(i) => {
                if rank(&provenance) < rank(&self.entries[i].provenance) {
                    self.entries[i].provenance = provenance;
                }
            }
            Err(i) => {
                let form = phi_forward(&trig);
                self.entries.insert(i, TrigSolution { trig, form, provenance });
            }
        }
    }

    pub fn entries(&self) -> &[TrigSolution] {
        &self.entries
    }

    pub fn trigs(&self) -> Vec<TrigPoly> {
        self.entries.iter().map(|e| e.trig.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, y: &TrigPoly) -> bool {
        self.entries.iter().any(|e| &e.trig == y)
    }

    pub fn complete_over_rationals(&self) -> bool {
        self.complete_over_rationals
    }

    fn translated(&self, shift: &TrigPoly) -> TrigSolutionSet {
        let mut out = TrigSolutionSet::new(self.complete_over_rationals);
        for e in &self.entries {
            out.insert(&e.trig + shift, e.provenance.clone());
        }
        out
    }
}

/// `c` making `c*u + v` constant (see the polynomial closure).
fn constant_combination(u: &Poly, v: &Poly) -> Option<Rational> {
    let mut c: Option<Rational> = None;
    for k in 1..=u.deg().max(v.deg()) {
        let (uk, vk) = (u.coeff(k), v.coeff(k));
        if uk.is_zero() {
            if !vk.is_zero() {
                return None;
            }
            continue;
        }
        let ck = -vk / uk;
        match &c {
            Some(prev) if *prev != ck => return None,
            Some(_) => {}
            None => c = Some(ck),
        }
    }
    c
}

/// Every trigonometric-polynomial solution of a reduced equation, from two
/// distinct nonzero solutions.
///
/// Write `Yi = g ti' / (1+x^2)^ei` with `e1 <= e2`, `g` the gcd of the
/// numerators and `t1 = t1' (1+x^2)^(e2-e1)`, `t2 = t2'`. Every nonzero
/// solution is `g t1' t2' / ((1+x^2)^e1 s_c)` with `s_c = c t1 + (1-c) t2`.
/// Once `(1+x^2)^sigma` is stripped from `s_c`, what is left must divide
/// `g`, so `c` is 0, 1, a root of `s_c` modulo a factor of `g` or modulo
/// `1+x^2`, or the value making `s_c` constant.
pub fn trig_closure(eq_reduced: &TrigRiccatiEq, y1: &TrigPoly, y2: &TrigPoly) -> Result<TrigSolutionSet> {
    if y1 == y2 || y1.is_zero() || y2.is_zero() {
        return Err(Error::DegenerateSeedPair);
    }
    for y in [y1, y2] {
        if !eq_reduced.verify_solution(y) {
            return Err(Error::NotASolution(y.to_string()));
        }
    }
    if !eq_reduced.is_reduced() {
        return Err(Error::NotASolution("0".into()));
    }
    let (y1, y2) = if y1.degree() <= y2.degree() { (y1, y2) } else { (y2, y1) };
    let (f1, f2) = (phi_forward(y1), phi_forward(y2));
    let (e1, e2) = (f1.nu(), f2.nu());
    let q = Poly::one_plus_x2();

    let g = f1.numerator().gcd(f2.numerator())?;
    let u1 = f1.numerator().exact_div(&g)?;
    let u2 = f2.numerator().exact_div(&g)?;
    let t1 = &u1 * &q.pow((e2 - e1) as u32);
    let t2 = u2.clone();
    let diff = &t1 - &t2;
    let numerator = &(&g * &u1) * &u2;

    let mut candidates = vec![Rational::zero(), Rational::one()];
    if !diff.is_zero() {
        for (p, _) in factor_irreducible(&g)?.factors {
            candidates.extend(residue_solve_unchecked(&diff, &t2, &p));
        }
        candidates.extend(residue_solve_unchecked(&diff, &t2, &q));
        candidates.extend(constant_combination(&diff, &t2));
    }
    candidates.sort();
    candidates.dedup();

    let mut out = TrigSolutionSet::new(true);
    out.insert(TrigPoly::zero(), Provenance::BaseSearch);
    let mut raised = 0;
    for c in candidates {
        let s = &diff.scale(&c) + &t2;
        if s.is_zero() {
            continue;
        }
        let (s_hat, sigma) = s.strip_factor(&q);
        let Ok(num) = numerator.exact_div(&s_hat) else {
            continue;
        };
        let Ok(form) = RatForm::try_new(num, e1 + sigma) else {
            continue;
        };
        let y = phi_inverse(&form);
        if eq_reduced.verify_solution(&y) {
            if y.degree() > e2 {
                raised += 1;
            }
            out.insert(y, Provenance::Closure(c));
        }
    }
    // at most one member of the family can exceed both seed degrees
    debug_assert!(raised <= 1, "two raised-degree closure members");
    Ok(out)
}

/// Every trigonometric-polynomial solution with rational Fourier coefficients.
pub fn solve_all_trig(eq: &TrigRiccatiEq, seeds: Option<&[TrigPoly]>) -> Result<TrigSolutionSet> {
    let seeds = seeds.unwrap_or(&[]);
    for s in seeds {
        if !eq.verify_solution(s) {
            return Err(Error::NotASolution(s.to_string()));
        }
    }

    let mut complete = true;
    let (y0, y0_provenance) = if let Some(s) = seeds.first() {
        (s.clone(), Provenance::Seeded)
    } else if eq.is_reduced() {
        (TrigPoly::zero(), Provenance::BaseSearch)
    } else {
        let sweep = trig_sweep_solutions(eq);
        complete = sweep.complete;
        match sweep.solutions.into_iter().next() {
            Some(y) => (y, Provenance::BaseSearch),
            None => return Ok(TrigSolutionSet::new(complete)),
        }
    };

    let reduced = eq.reduce(&y0)?;
    let mut pool: Vec<(TrigPoly, Provenance)> = seeds
        .iter()
        .map(|s| s - &y0)
        .filter(|w| !w.is_zero())
        .map(|w| (w, Provenance::Seeded))
        .collect();
    pool.dedup_by(|a, b| a.0 == b.0);
    if pool.len() < 2 {
        let base = trig_base_solutions(&reduced)?;
        complete &= base.complete;
        for w in base.solutions {
            if pool.len() < 2 && !pool.iter().any(|(p, _)| p == &w) {
                pool.push((w, Provenance::BaseSearch));
            }
        }
    }

    let mut reduced_set = if pool.len() >= 2 {
        trig_closure(&reduced, &pool[0].0, &pool[1].0)?
    } else {
        TrigSolutionSet::new(true)
    };
    reduced_set.insert(TrigPoly::zero(), y0_provenance);
    for (w, prov) in pool {
        reduced_set.insert(w, prov);
    }
    reduced_set.complete_over_rationals = complete;

    let out = reduced_set.translated(&y0);
    check_bound(eq, &out)?;
    Ok(out)
}

fn check_bound(eq: &TrigRiccatiEq, set: &TrigSolutionSet) -> Result<()> {
    let bound = trig_count_bound(eq.eta());
    if set.len() > bound {
        return Err(Error::BoundViolation { found: set.len(), bound });
    }
    let dmax = eq.degree_bound();
    for e in set.entries() {
        debug_assert!(eq.verify_solution(&e.trig), "uncertified output {}", e.trig);
        if e.trig.degree() > dmax {
            return Err(Error::BoundViolation { found: e.trig.degree(), bound: dmax });
        }
    }
    Ok(())
}

/// Constant cross ratio of four trigonometric solutions of one equation.
pub fn trig_cross_ratio(y1: &TrigPoly, y2: &TrigPoly, y3: &TrigPoly, y4: &TrigPoly) -> Result<Rational> {
    let ys = [y1, y2, y3, y4];
    for i in 0..4 {
        for j in i + 1..4 {
            if ys[i] == ys[j] {
                return Err(Error::DegenerateQuadruple);
            }
        }
    }
    let num = &(y4 - y1) * &(y3 - y2);
    let den = &(y3 - y1) * &(y4 - y2);
    // compare on the x-side, where both are f / (1+x^2)^nu with equal nu
    let (fnum, fden) = (phi_forward(&num), phi_forward(&den));
    if fnum.nu() != fden.nu() {
        return Err(Error::NotSolutionsOfSameEquation);
    }
    let k = fnum.numerator().leading() / fden.numerator().leading();
    if fnum.numerator() != &fden.numerator().scale(&k) {
        return Err(Error::NotSolutionsOfSameEquation);
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a0: i64, cos: &[i64], sin: &[i64]) -> TrigPoly {
        TrigPoly::from_i64(a0, cos, sin)
    }

    fn eta_one() -> TrigRiccatiEq {
        TrigRiccatiEq::new(t(0, &[], &[1]), TrigPoly::zero(), t(0, &[2], &[]), t(-1, &[], &[])).unwrap()
    }

    #[test]
    fn eta_one_fixture() {
        let set = solve_all_trig(&eta_one(), None).unwrap();
        assert_eq!(set.len(), 3);
        for y in [TrigPoly::zero(), t(1, &[1], &[]), t(-1, &[1], &[])] {
            assert!(set.contains(&y));
        }
    }

    #[test]
    fn closure_needs_distinct_seeds() {
        let y = t(1, &[1], &[]);
        assert_eq!(trig_closure(&eta_one(), &y, &y), Err(Error::DegenerateSeedPair));
    }

    #[test]
    fn seeded_unreduced() {
        let eq = eta_one();
        let y0 = t(1, &[1], &[]);
        let b1 = eq.b1() - &(eq.b2() * &y0).scale(&crate::qpoly::rat(2));
        let b0 = &(&(eq.a() * &y0.derivative()) - &(&b1 * &y0)) - &(eq.b2() * &(&y0 * &y0));
        let shifted = TrigRiccatiEq::new(eq.a().clone(), b0, b1, eq.b2().clone()).unwrap();
        let seeded = solve_all_trig(&shifted, Some(&[y0.clone()])).unwrap();
        let unseeded = solve_all_trig(&shifted, None).unwrap();
        assert_eq!(seeded.trigs(), unseeded.trigs());
        assert_eq!(seeded.len(), 3);
        assert!(seeded.contains(&y0));
    }
}
