use super::equation::TrigRiccatiEq;
use super::solve::TrigSolutionSet;
use crate::error::{Error, Result};
use crate::qpoly::{rat, Poly, Rational};
use crate::riccati_poly::Provenance;
use crate::trigring::{phi_inverse, RatForm, TrigPoly};

/// A reduced equation with exactly `k + 3` trigonometric-polynomial
/// solutions, built on the x-side from `g = prod (x - ci)`:
///
/// `A = 2 (x-d1)(x-d2) g / q^eta`, `B1 = (g h1 + g' h2) / q^eta`, `B2 = -1`,
/// with `q = 1+x^2`, `h1 = q (2x - d1 - d2) - 2 (eta-1) x (x-d1)(x-d2)` and
/// `h2 = q (x-d1)(x-d2)`. The solutions are 0 and
/// `g (x-d1)(x-d2) / (q^(eta-1) (x - (c d1 + (1-c) d2)))` for
/// `c = 0, 1, (ci - d2)/(d1 - d2)`.
pub fn gen_extremal_trig(
    eta: usize,
    c_list: &[Rational],
    d1: &Rational,
    d2: &Rational,
) -> Result<(TrigRiccatiEq, TrigSolutionSet)> {
    let k = c_list.len();
    if eta < 2 {
        return Err(Error::BadParameters(format!("eta must be at least 2, got {eta}")));
    }
    if k < 1 || k > 2 * eta - 3 {
        return Err(Error::BadParameters(format!("k must lie in 1..={}, got {k}", 2 * eta - 3)));
    }
    let mut all: Vec<&Rational> = c_list.iter().collect();
    all.push(d1);
    all.push(d2);
    for (i, r) in all.iter().enumerate() {
        if all[..i].contains(r) {
            return Err(Error::BadParameters(format!("constant {r} is repeated")));
        }
    }

    let x = Poly::x();
    let q = Poly::one_plus_x2();
    let l1 = Poly::linear_root(d1);
    let l2 = Poly::linear_root(d2);
    let l12 = &l1 * &l2;
    let g = c_list.iter().fold(Poly::one(), |acc, c| &acc * &Poly::linear_root(c));
    let h1 = &(&q * &(&x.scale(&rat(2)) - &Poly::constant(d1 + d2)))
        - &(&x * &l12).scale(&rat(2 * (eta as i64 - 1)));
    let h2 = &q * &l12;

    let as_trig = |num: Poly, nu: usize| -> Result<TrigPoly> { Ok(phi_inverse(&RatForm::reduced(num, nu)?)) };
    let a = as_trig((&l12 * &g).scale(&rat(2)), eta)?;
    let b1 = as_trig(&(&g * &h1) + &(&g.derivative() * &h2), eta)?;
    let b2 = TrigPoly::constant(rat(-1));
    let eq = TrigRiccatiEq::new(a, TrigPoly::zero(), b1, b2)?;

    let numerator = &g * &l12;
    let mut cs = vec![rat(0), rat(1)];
    cs.extend(c_list.iter().map(|ci| (ci - d2) / (d1 - d2)));
    let mut set = TrigSolutionSet::new(true);
    set.insert(TrigPoly::zero(), Provenance::Seeded);
    for c in cs {
        let root = &c * d1 + (rat(1) - &c) * d2;
        let y = as_trig(numerator.exact_div(&Poly::linear_root(&root))?, eta - 1)?;
        debug_assert!(eq.verify_solution(&y), "generated member fails at c = {c}");
        set.insert(y, Provenance::Seeded);
    }
    Ok((eq, set))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_case() {
        let (eq, set) = gen_extremal_trig(2, &[rat(0)], &rat(1), &rat(-1)).unwrap();
        assert_eq!(eq.eta(), 2);
        assert_eq!(set.len(), 4);
        for e in set.entries() {
            assert!(eq.verify_solution(&e.trig));
        }
    }

    #[test]
    fn parameter_checks() {
        assert!(matches!(gen_extremal_trig(2, &[rat(0), rat(2)], &rat(1), &rat(-1)), Err(Error::BadParameters(_))));
        assert!(matches!(gen_extremal_trig(3, &[rat(1)], &rat(1), &rat(-1)), Err(Error::BadParameters(_))));
        assert!(matches!(gen_extremal_trig(1, &[rat(0)], &rat(1), &rat(-1)), Err(Error::BadParameters(_))));
    }
}
