//! Searching for polynomial solutions directly.
//!
//! The divisor method builds candidates from the irreducible factors of `a`,
//! and is exhaustive for reduced equations. The coefficient sweep works for
//! any equation and doubles as a brute-force oracle.

use num_traits::{One, Zero};

use super::equation::RiccatiEq;
use super::system::solve_system;
use crate::error::Result;
use crate::qpoly::{factor_irreducible, residue_solve_unchecked, MPoly, Poly, Rational};

/// Result of a search, with an honest completeness flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Canonically sorted, deduplicated.
    pub solutions: Vec<Poly>,
    /// False if some branch of the coefficient sweep had to be abandoned
    /// (an IncompleteSearch diagnostic).
    pub complete: bool,
}

/// Coefficients of `p * y` where `y` has symbolic coefficients `ys`.
fn mul_symbolic(p: &Poly, ys: &[MPoly], nvars: usize) -> Vec<MPoly> {
    if p.is_zero() || ys.is_empty() {
        return Vec::new();
    }
    let mut out = vec![MPoly::zero(nvars); p.coeffs().len() + ys.len() - 1];
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, y) in ys.iter().enumerate() {
            out[i + j] = &out[i + j] + &y.scale(c);
        }
    }
    out
}

fn add_into(acc: &mut Vec<MPoly>, part: Vec<MPoly>, sign: &Rational) {
    if acc.len() < part.len() {
        let n = part[0].nvars();
        acc.resize(part.len(), MPoly::zero(n));
    }
    for (i, p) in part.into_iter().enumerate() {
        acc[i] = &acc[i] + &p.scale(sign);
    }
}

/// Residual coefficients of `eq` at `y = c_0 + ... + c_delta x^delta`.
fn residual_system(eq: &RiccatiEq, delta: usize) -> Vec<MPoly> {
    let n = delta + 1;
    let ys: Vec<MPoly> = (0..n).map(|i| MPoly::var(n, i)).collect();
    let dys: Vec<MPoly> = (1..n).map(|i| ys[i].scale(&Rational::from_integer(i.into()))).collect();
    let mut square = vec![MPoly::zero(n); 2 * n - 1];
    for i in 0..n {
        for j in 0..n {
            square[i + j] = &square[i + j] + &(&ys[i] * &ys[j]);
        }
    }
    let one = Rational::one();
    let minus = -Rational::one();
    let mut res: Vec<MPoly> = Vec::new();
    add_into(&mut res, mul_symbolic(eq.a(), &dys, n), &one);
    add_into(&mut res, eq.b0().coeffs().iter().map(|c| MPoly::constant(n, c.clone())).collect(), &minus);
    add_into(&mut res, mul_symbolic(eq.b1(), &ys, n), &minus);
    add_into(&mut res, mul_symbolic(eq.b2(), &square, n), &minus);
    res
}

/// Undetermined-coefficient sweep over every exact degree `0..=max_degree`
/// (Method B).
pub fn sweep_solutions(eq: &RiccatiEq, max_degree: usize) -> SearchOutcome {
    let mut solutions = Vec::new();
    let mut complete = true;
    if eq.verify_solution(&Poly::zero()) {
        solutions.push(Poly::zero());
    }
    for delta in 0..=max_degree {
        let out = solve_system(delta + 1, residual_system(eq, delta), Some(delta));
        complete &= out.complete;
        for point in out.solutions {
            let y = Poly::from_coeffs(point);
            debug_assert!(eq.verify_solution(&y));
            solutions.push(y);
        }
    }
    solutions.sort();
    solutions.dedup();
    SearchOutcome { solutions, complete }
}

/// Multiplicities an irreducible factor `p` of `a` (with multiplicity `r`
/// in `a`) can have in a nonzero solution of a reduced equation.
///
/// Writing `y = p^k h` near a root `x*` of `p`, the equation becomes
/// `a (k h + (x - x*) h~) = (x - x*)(b1 + b2 y) h`, whose left side vanishes
/// to order exactly `r`. So either `k < r`, or `k >= r`, `p^(r-1) | b1` and
/// `k` equals the residue of `(b1 / p^(r-1)) / ((a / p^r) p')` modulo `p`.
fn allowed_multiplicities(eq: &RiccatiEq, p: &Poly, r: usize, max_degree: usize) -> Vec<usize> {
    let cap = max_degree / p.deg();
    let mut out: Vec<usize> = (0..r.min(cap + 1)).collect();
    let forced = (|| {
        let b1 = eq.b1().exact_div(&p.pow(r as u32 - 1)).ok()?;
        let a0 = eq.a().exact_div(&p.pow(r as u32)).ok()?;
        let k = residue_solve_unchecked(&(&a0 * &p.derivative()), &-b1, p)?;
        if !k.is_integer() || k < Rational::from_integer(r.into()) {
            return None;
        }
        k.to_integer().try_into().ok()
    })();
    if let Some(k) = forced {
        if k <= cap {
            out.push(k);
        }
    }
    out
}

/// Divisor method (Method A) for a reduced equation: every nonzero solution
/// is `lambda * m` with `m` a monic product of irreducible factors of `a`
/// and `lambda = (a m' - b1 m) / (b2 m^2)` a nonzero constant.
pub fn method_a(eq: &RiccatiEq, max_degree: usize) -> Result<Vec<Poly>> {
    let mut products = vec![Poly::one()];
    for (p, r) in factor_irreducible(eq.a())?.factors {
        let choices = allowed_multiplicities(eq, &p, r, max_degree);
        let mut next = Vec::new();
        for base in &products {
            for &k in &choices {
                if base.deg() + k * p.deg() <= max_degree {
                    next.push(base * &p.pow(k as u32));
                }
            }
        }
        products = next;
    }
    let mut found = Vec::new();
    for m in products {
        let num = &(eq.a() * &m.derivative()) - &(eq.b1() * &m);
        if num.is_zero() {
            continue;
        }
        let Ok(lambda) = num.exact_div(&(eq.b2() * &(&m * &m))) else {
            continue;
        };
        if !lambda.is_constant() {
            continue;
        }
        let y = m.scale(&lambda.coeff(0));
        if eq.verify_solution(&y) {
            found.push(y);
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

/// Up to `max_found` nonzero solutions of a reduced equation.
///
/// The divisor method is exhaustive for reduced equations, so the result is
/// always complete. When it finds fewer than `max_found`, the sweep is run as
/// an independent cross-check.
pub fn base_solutions(eq_reduced: &RiccatiEq, max_found: usize) -> Result<SearchOutcome> {
    if !eq_reduced.is_reduced() {
        return Err(crate::Error::NotASolution("0".into()));
    }
    let bound = eq_reduced.degree_bound();
    let mut solutions = method_a(eq_reduced, bound)?;
    if solutions.len() < max_found {
        let sweep = sweep_solutions(eq_reduced, bound);
        debug_assert!(sweep.solutions.iter().all(|y| y.is_zero() || solutions.contains(y)));
    }
    solutions.truncate(max_found);
    Ok(SearchOutcome { solutions, complete: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn x_to_the_nu_family() {
        // x y' = (2 - x^2) y + y^2 has y = x^2
        let eq = RiccatiEq::new(p(&[0, 1]), Poly::zero(), p(&[2, 0, -1]), p(&[1])).unwrap();
        let x2 = Poly::monomial(rat(1), 2);
        assert!(method_a(&eq, 2).unwrap().contains(&x2));
        assert!(sweep_solutions(&eq, 2).solutions.contains(&x2));
    }

    #[test]
    fn constant_pair() {
        // y' = y (y - 2)
        let eq = RiccatiEq::new(p(&[1]), Poly::zero(), p(&[-2]), p(&[1])).unwrap();
        assert_eq!(base_solutions(&eq, 2).unwrap().solutions, vec![p(&[2])]);
        assert_eq!(sweep_solutions(&eq, 0).solutions, vec![Poly::zero(), p(&[2])]);
    }

    #[test]
    fn sweep_on_unreduced() {
        // y' = (1 - x^2) + y^2 has y = x; constant/linear solutions only that one
        let eq = RiccatiEq::new(p(&[1]), p(&[1, 0, -1]), Poly::zero(), p(&[1])).unwrap();
        let out = sweep_solutions(&eq, eq.degree_bound());
        assert!(out.complete);
        assert_eq!(out.solutions, vec![p(&[0, 1])]);
    }

    #[test]
    fn extremal_pair() {
        // a = -(x-1)(x-2)(x-3), b1 = a', b2 = 1
        let a = -(&(&p(&[-1, 1]) * &p(&[-2, 1])) * &p(&[-3, 1]));
        let eq = RiccatiEq::new(a.clone(), Poly::zero(), a.derivative(), p(&[1])).unwrap();
        let all = method_a(&eq, 3).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.contains(&(&p(&[-2, 1]) * &p(&[-3, 1]))));
        assert!(all.contains(&(&p(&[-1, 1]) * &p(&[-3, 1]))));
        let mut swept = sweep_solutions(&eq, 3).solutions;
        swept.retain(|y| !y.is_zero());
        assert_eq!(swept, all);
    }
}
