//! Exact solver for the small polynomial systems produced by undetermined
//! coefficients. Rational solutions only.
//!
//! Strategy per state: branch on the rational roots of a univariate equation
//! (highest unknown first), otherwise eliminate an unknown that appears
//! linearly with a constant coefficient, otherwise take resultants when at
//! most three unknowns remain. Anything else is reported as incomplete.

use num_traits::{One, Zero};

use crate::qpoly::{rational_roots, MPoly, Rational};

/// Most unknowns the resultant fallback will eliminate across.
const MAX_RESULTANT_VARS: usize = 3;
/// Equations per variable fed to pairwise resultants.
const RESULTANT_POOL: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemOutcome {
    pub solutions: Vec<Vec<Rational>>,
    /// False when some branch could not be resolved exactly.
    pub complete: bool,
}

#[derive(Clone)]
struct State {
    eqs: Vec<MPoly>,
    values: Vec<Option<Rational>>,
    /// `var = expr` eliminations, kept substituted up to date.
    deferred: Vec<(usize, MPoly)>,
}

enum Elimination {
    Found(usize, Vec<Rational>),
    Inconsistent,
    Stuck,
}

/// All rational points of `eqs = 0`, with `nonzero` unknown required `!= 0`.
pub fn solve_system(nvars: usize, eqs: Vec<MPoly>, nonzero: Option<usize>) -> SystemOutcome {
    let state = State { eqs, values: vec![None; nvars], deferred: Vec::new() };
    let mut out = SystemOutcome { solutions: Vec::new(), complete: true };
    run(state, nonzero, &mut out);
    out.solutions.sort();
    out.solutions.dedup();
    out
}

fn normalize(eqs: Vec<MPoly>) -> Option<Vec<MPoly>> {
    let mut out: Vec<MPoly> = Vec::new();
    for e in eqs {
        if e.is_zero() {
            continue;
        }
        if e.is_constant() {
            return None;
        }
        let lead = e.terms().last().map(|(_, c)| c.clone()).expect("nonzero");
        let e = e.scale(&(Rational::one() / lead));
        if !out.contains(&e) {
            out.push(e);
        }
    }
    Some(out)
}

fn assign(mut st: State, var: usize, value: &Rational) -> State {
    st.eqs = st.eqs.iter().map(|e| e.substitute_value(var, value)).collect();
    for (_, expr) in st.deferred.iter_mut() {
        *expr = expr.substitute_value(var, value);
    }
    st.values[var] = Some(value.clone());
    st
}

fn eliminate_linear(mut st: State, var: usize, expr: MPoly) -> State {
    st.eqs = st.eqs.iter().map(|e| e.substitute_poly(var, &expr)).collect();
    for (_, e) in st.deferred.iter_mut() {
        *e = e.substitute_poly(var, &expr);
    }
    st.deferred.push((var, expr));
    st
}

fn run(mut st: State, nonzero: Option<usize>, out: &mut SystemOutcome) {
    let Some(eqs) = normalize(std::mem::take(&mut st.eqs)) else {
        return;
    };
    st.eqs = eqs;

    if st.eqs.is_empty() {
        finish(st, nonzero, out);
        return;
    }

    // Univariate equation in the highest unknown.
    let univariate = st
        .eqs
        .iter()
        .filter_map(|e| match e.vars_present().as_slice() {
            [v] => Some((*v, e)),
            _ => None,
        })
        .max_by(|(v1, e1), (v2, e2)| v1.cmp(v2).then(e2.degree_in(*v2).cmp(&e1.degree_in(*v1))));
    if let Some((v, e)) = univariate {
        let roots = rational_roots(&e.to_univariate(v).expect("single variable")).expect("nonzero");
        for r in roots {
            if nonzero == Some(v) && r.is_zero() {
                continue;
            }
            run(assign(st.clone(), v, &r), nonzero, out);
        }
        return;
    }

    // Linear occurrence with a constant coefficient.
    let mut linear: Option<(usize, MPoly)> = None;
    for e in &st.eqs {
        for v in e.vars_present() {
            if e.degree_in(v) != 1 {
                continue;
            }
            let cs = e.coeffs_in(v);
            if let Some(k) = cs[1].constant_value() {
                if linear.as_ref().map_or(true, |(best, _)| v > *best) {
                    linear = Some((v, cs[0].scale(&(-Rational::one() / k))));
                }
            }
        }
    }
    if let Some((v, expr)) = linear {
        run(eliminate_linear(st, v, expr), nonzero, out);
        return;
    }

    let vars = present_vars(&st.eqs);
    if vars.len() > MAX_RESULTANT_VARS {
        out.complete = false;
        return;
    }
    match eliminate(&st.eqs, &vars) {
        Elimination::Inconsistent => {}
        Elimination::Stuck => out.complete = false,
        Elimination::Found(v, roots) => {
            for r in roots {
                if nonzero == Some(v) && r.is_zero() {
                    continue;
                }
                run(assign(st.clone(), v, &r), nonzero, out);
            }
        }
    }
}

fn finish(st: State, nonzero: Option<usize>, out: &mut SystemOutcome) {
    let mut values = st.values;
    for (v, expr) in st.deferred.iter() {
        match expr.constant_value() {
            Some(c) => values[*v] = Some(c),
            None => {
                // A free unknown survived: a continuum the solver does not enumerate.
                out.complete = false;
                return;
            }
        }
    }
    let Some(point) = values.into_iter().collect::<Option<Vec<_>>>() else {
        out.complete = false;
        return;
    };
    if let Some(v) = nonzero {
        if point[v].is_zero() {
            return;
        }
    }
    out.solutions.push(point);
}

fn present_vars(eqs: &[MPoly]) -> Vec<usize> {
    let mut vars: Vec<usize> = eqs.iter().flat_map(|e| e.vars_present()).collect();
    vars.sort_unstable();
    vars.dedup();
    vars
}

/// Eliminates unknowns by pairwise resultants until one equation is
/// univariate, returning its rational roots.
fn eliminate(eqs: &[MPoly], vars: &[usize]) -> Elimination {
    for e in eqs {
        if let [v] = e.vars_present().as_slice() {
            let roots = rational_roots(&e.to_univariate(*v).expect("single variable")).expect("nonzero");
            return Elimination::Found(*v, roots);
        }
    }
    if vars.len() < 2 {
        return Elimination::Stuck;
    }
    for &w in vars.iter().rev() {
        let mut with: Vec<&MPoly> = eqs.iter().filter(|e| e.degree_in(w) > 0).collect();
        with.sort_by_key(|e| e.total_degree());
        with.truncate(RESULTANT_POOL);
        let mut next: Vec<MPoly> = eqs.iter().filter(|e| e.degree_in(w) == 0).cloned().collect();
        for i in 0..with.len() {
            for j in i + 1..with.len() {
                next.push(with[i].resultant(with[j], w));
            }
        }
        let Some(next) = normalize(next) else {
            return Elimination::Inconsistent;
        };
        if next.is_empty() {
            continue;
        }
        let rest: Vec<usize> = vars.iter().copied().filter(|&v| v != w).collect();
        match eliminate(&next, &rest) {
            Elimination::Stuck => continue,
            found => return found,
        }
    }
    Elimination::Stuck
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::rat;

    fn v(n: usize, i: usize) -> MPoly {
        MPoly::var(n, i)
    }

    fn c(n: usize, k: i64) -> MPoly {
        MPoly::constant(n, rat(k))
    }

    #[test]
    fn triangular_quadratic() {
        // x1^2 = 4, x0 = x1 + 1
        let (x0, x1) = (v(2, 0), v(2, 1));
        let eqs = vec![&(&x1 * &x1) - &c(2, 4), &(&x0 - &x1) - &c(2, 1)];
        let out = solve_system(2, eqs, None);
        assert!(out.complete);
        assert_eq!(out.solutions, vec![vec![rat(-1), rat(-2)], vec![rat(3), rat(2)]]);
    }

    #[test]
    fn nonzero_constraint() {
        let x0 = v(1, 0);
        let out = solve_system(1, vec![&(&x0 * &x0) - &(&x0 * &c(1, 3))], Some(0));
        assert_eq!(out.solutions, vec![vec![rat(3)]]);
    }

    #[test]
    fn resultant_fallback() {
        // x^2 + y^2 = 5, xy = 2: (1,2), (2,1), (-1,-2), (-2,-1)
        let (x, y) = (v(2, 0), v(2, 1));
        let eqs = vec![&(&(&x * &x) + &(&y * &y)) - &c(2, 5), &(&x * &y) - &c(2, 2)];
        let out = solve_system(2, eqs, None);
        assert!(out.complete);
        assert_eq!(out.solutions.len(), 4);
        assert!(out.solutions.contains(&vec![rat(2), rat(1)]));
    }

    #[test]
    fn irrational_points_are_skipped() {
        let x = v(1, 0);
        let out = solve_system(1, vec![&(&x * &x) - &c(1, 2)], None);
        assert!(out.complete);
        assert!(out.solutions.is_empty());
    }

    #[test]
    fn inconsistent() {
        let (x, y) = (v(2, 0), v(2, 1));
        let out = solve_system(2, vec![&x - &y, &(&x - &y) - &c(2, 1)], None);
        assert!(out.solutions.is_empty());
        assert!(out.complete);
    }

    #[test]
    fn free_unknown_is_incomplete() {
        let (x, y) = (v(2, 0), v(2, 1));
        let out = solve_system(2, vec![&x - &y], None);
        assert!(!out.complete);
    }
}
