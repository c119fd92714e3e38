//! Closure from a seed pair, and the full pipeline.

use num_traits::{One, Zero};

use super::equation::RiccatiEq;
use super::search::{base_solutions, sweep_solutions};
use crate::error::{Error, Result};
use crate::qpoly::{factor_irreducible, residue_solve_unchecked, Poly, Rational};

/// How a solution was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Seeded,
    BaseSearch,
    /// Member `y(x; c)` of the one-parameter family through the seed pair.
    Closure(Rational),
}

impl Provenance {
    fn rank(&self) -> u8 {
        match self {
            Provenance::Seeded => 0,
            Provenance::BaseSearch => 1,
            Provenance::Closure(_) => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub poly: Poly,
    pub provenance: Provenance,
}

/// Certified solutions in canonical order, each listed once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    entries: Vec<Solution>,
    complete_over_rationals: bool,
}

impl SolutionSet {
    pub(crate) fn new(complete_over_rationals: bool) -> Self {
        SolutionSet { entries: Vec::new(), complete_over_rationals }
    }

    /// Adds `poly` unless present; an existing entry keeps the more direct
    /// provenance (seeded, then base search, then closure).
    pub(crate) fn insert(&mut self, poly: Poly, provenance: Provenance) {
        match self.entries.binary_search_by(|e| e.poly.canonical_cmp(&poly)) {
            Ok(i) => {
                if provenance.rank() < self.entries[i].provenance.rank() {
                    self.entries[i].provenance = provenance;
                }
            }
            Err(i) => self.entries.insert(i, Solution { poly, provenance }),
        }
    }

    pub fn entries(&self) -> &[Solution] {
        &self.entries
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.entries.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, y: &Poly) -> bool {
        self.entries.iter().any(|e| &e.poly == y)
    }

    pub fn complete_over_rationals(&self) -> bool {
        self.complete_over_rationals
    }

    fn translated(&self, shift: &Poly) -> SolutionSet {
        let mut out = SolutionSet::new(self.complete_over_rationals);
        for e in &self.entries {
            out.insert(&e.poly + shift, e.provenance.clone());
        }
        out
    }
}

/// `c` making `c*u + v` a constant, if one exists. `u` is nonzero.
fn constant_combination(u: &Poly, v: &Poly) -> Option<Rational> {
    let top = u.deg().max(v.deg());
    let mut c: Option<Rational> = None;
    for k in 1..=top {
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
    // u constant as well: any c works, none singles out a new solution
    c
}

/// Every polynomial solution of a reduced equation, from two distinct
/// nonzero solutions.
///
/// With `g = gcd(y1, y2)` and `yi = g * ti`, every solution other than 0 is
/// `y(c) = g t1 t2 / (c t1 + (1 - c) t2)`. The only `c` that can make this a
/// polynomial are 0, 1, a root of the denominator modulo an irreducible
/// factor of `g`, and the one making the denominator constant.
pub fn closure_solutions(eq_reduced: &RiccatiEq, y1: &Poly, y2: &Poly) -> Result<SolutionSet> {
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
    let g = y1.gcd(y2)?;
    let t1 = y1.exact_div(&g)?;
    let t2 = y2.exact_div(&g)?;
    let diff = &t1 - &t2;
    let numerator = &(&g * &t1) * &t2;

    let mut candidates = vec![Rational::zero(), Rational::one()];
    if !diff.is_zero() {
        for (p, _) in factor_irreducible(&g)?.factors {
            if let Some(c) = residue_solve_unchecked(&diff, &t2, &p) {
                candidates.push(c);
            }
        }
        if let Some(c) = constant_combination(&diff, &t2) {
            candidates.push(c);
        }
    }
    candidates.sort();
    candidates.dedup();

    let mut out = SolutionSet::new(true);
    out.insert(Poly::zero(), Provenance::BaseSearch);
    for c in candidates {
        let denom = &diff.scale(&c) + &t2;
        if denom.is_zero() {
            continue;
        }
        let Ok(y) = numerator.exact_div(&denom) else {
            continue;
        };
        if eq_reduced.verify_solution(&y) {
            out.insert(y, Provenance::Closure(c));
        }
    }
    Ok(out)
}

/// Ceiling on the number of solutions for an equation of degree `eta`.
pub fn poly_count_bound(eta: usize) -> usize {
    if eta == 0 {
        2
    } else {
        eta + 1
    }
}

/// Every polynomial solution with rational coefficients.
///
/// Seeds are certified and used as the translation point; without seeds a
/// first solution comes from `y = 0` (if `b0 = 0`) or from the coefficient
/// sweep. The remaining solutions come from the divisor method and closure.
pub fn solve_all(eq: &RiccatiEq, seeds: Option<&[Poly]>) -> Result<SolutionSet> {
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
        (Poly::zero(), Provenance::BaseSearch)
    } else {
        let sweep = sweep_solutions(eq, eq.degree_bound());
        complete = sweep.complete;
        match sweep.solutions.into_iter().next() {
            Some(y) => (y, Provenance::BaseSearch),
            None => return Ok(SolutionSet::new(complete)),
        }
    };

    let reduced = eq.reduce_equation(&y0)?;
    let known: Vec<Poly> = seeds.iter().map(|s| s - &y0).filter(|w| !w.is_zero()).collect();
    let base = base_solutions(&reduced, 2)?;
    complete &= base.complete;

    let mut pool: Vec<(Poly, Provenance)> = known.into_iter().map(|w| (w, Provenance::Seeded)).collect();
    for w in base.solutions {
        if !pool.iter().any(|(p, _)| p == &w) {
            pool.push((w, Provenance::BaseSearch));
        }
    }

    let mut reduced_set = if pool.len() >= 2 {
        closure_solutions(&reduced, &pool[0].0, &pool[1].0)?
    } else {
        SolutionSet::new(true)
    };
    reduced_set.insert(Poly::zero(), y0_provenance);
    for (w, prov) in pool {
        reduced_set.insert(w, prov);
    }
    reduced_set.complete_over_rationals = complete;

    let out = reduced_set.translated(&y0);
    check_bound(eq, &out)?;
    Ok(out)
}

fn check_bound(eq: &RiccatiEq, set: &SolutionSet) -> Result<()> {
    let bound = poly_count_bound(eq.eta());
    if set.len() > bound {
        return Err(Error::BoundViolation { found: set.len(), bound });
    }
    let dmax = eq.degree_bound();
    for e in set.entries() {
        debug_assert!(eq.verify_solution(&e.poly), "uncertified output {}", e.poly);
        if e.poly.degree().map_or(false, |d| d > dmax) {
            return Err(Error::BoundViolation { found: e.poly.deg(), bound: dmax });
        }
    }
    Ok(())
}

/// The constant cross ratio `((y4-y1)(y3-y2)) / ((y3-y1)(y4-y2))` of four
/// solutions of one Riccati equation.
pub fn cross_ratio(y1: &Poly, y2: &Poly, y3: &Poly, y4: &Poly) -> Result<Rational> {
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
    let k = num.leading() / den.leading();
    if num != den.scale(&k) {
        return Err(Error::NotSolutionsOfSameEquation);
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    fn lin(r: i64) -> Poly {
        p(&[-r, 1])
    }

    fn extremal_eq(roots: &[i64]) -> RiccatiEq {
        let a = -roots.iter().fold(Poly::one(), |acc, &r| &acc * &lin(r));
        RiccatiEq::new(a.clone(), Poly::zero(), a.derivative(), p(&[1])).unwrap()
    }

    #[test]
    fn closure_recovers_extremal_family() {
        let eq = extremal_eq(&[1, 2, 3, 4]);
        let y1 = &(&lin(2) * &lin(3)) * &lin(4);
        let y2 = &(&lin(1) * &lin(3)) * &lin(4);
        let set = closure_solutions(&eq, &y1, &y2).unwrap();
        assert_eq!(set.len(), 5);
        for e in set.entries() {
            assert!(eq.verify_solution(&e.poly));
        }
    }

    #[test]
    fn closure_rejects_degenerate_pair() {
        let eq = extremal_eq(&[1, 2]);
        let y = lin(2);
        assert_eq!(closure_solutions(&eq, &y, &y), Err(Error::DegenerateSeedPair));
    }

    #[test]
    fn riccati_with_only_zero() {
        let eq = RiccatiEq::new(p(&[1]), Poly::zero(), Poly::zero(), p(&[1])).unwrap();
        let set = solve_all(&eq, None).unwrap();
        assert_eq!(set.polys(), vec![Poly::zero()]);
    }

    #[test]
    fn two_constants() {
        let eq = RiccatiEq::new(p(&[1]), Poly::zero(), p(&[-2]), p(&[1])).unwrap();
        assert_eq!(solve_all(&eq, None).unwrap().polys(), vec![Poly::zero(), p(&[2])]);
    }

    #[test]
    fn simple_root_family_eta3() {
        let a = &(&lin(1) * &lin(2)) * &lin(3);
        let eq = RiccatiEq::new(a.clone(), Poly::zero(), a.derivative(), p(&[1])).unwrap();
        let set = solve_all(&eq, None).unwrap();
        assert_eq!(set.len(), 4);
        assert!(set.complete_over_rationals());
    }

    #[test]
    fn unreduced_with_seed_and_without() {
        // shift the extremal family by y0 = x + 1
        let base = extremal_eq(&[1, 2, 3]);
        let y0 = p(&[1, 1]);
        let b1 = base.b1() - &(base.b2() * &y0).scale(&rat(2));
        let b0 = &(&(base.a() * &y0.derivative()) - &(&b1 * &y0)) - &(base.b2() * &(&y0 * &y0));
        let eq = RiccatiEq::new(base.a().clone(), b0, b1, base.b2().clone()).unwrap();
        assert!(eq.verify_solution(&y0));
        let unseeded = solve_all(&eq, None).unwrap();
        let seeded = solve_all(&eq, Some(&[y0.clone()])).unwrap();
        assert_eq!(unseeded.polys(), seeded.polys());
        assert_eq!(unseeded.len(), 4);
        assert!(seeded.entries().iter().any(|e| e.poly == y0 && e.provenance == Provenance::Seeded));
    }

    #[test]
    fn cross_ratio_of_extremal() {
        let eq = extremal_eq(&[1, 2, 3]);
        let ys = solve_all(&eq, None).unwrap().polys();
        assert_eq!(ys.len(), 4);
        assert!(cross_ratio(&ys[0], &ys[1], &ys[2], &ys[3]).is_ok());
        assert_eq!(cross_ratio(&ys[0], &ys[0], &ys[2], &ys[3]), Err(Error::DegenerateQuadruple));
        assert_eq!(
            cross_ratio(&p(&[0]), &p(&[1]), &p(&[0, 1]), &p(&[0, 0, 1])),
            Err(Error::NotSolutionsOfSameEquation)
        );
    }
}
