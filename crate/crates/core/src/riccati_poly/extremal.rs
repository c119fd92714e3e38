use super::equation::RiccatiEq;
use super::solve::{Provenance, SolutionSet};
use crate::error::{Error, Result};
use crate::qpoly::{Poly, Rational};

/// An equation with exactly `j` polynomial solutions:
/// `a = -(x - x1)^(eta + 2 - j) (x - x2) ... (x - x_{j-1})`, `b1 = a'`,
/// `b2 = 1`, `b0 = 0`. Its solutions are 0 and `-a / (x - xi)`.
pub fn gen_extremal(eta: usize, j: usize, roots: &[Rational]) -> Result<(RiccatiEq, SolutionSet)> {
    if eta < 1 {
        return Err(Error::BadParameters(format!("eta must be at least 1, got {eta}")));
    }
    if j < 2 || j > eta + 1 {
        return Err(Error::BadParameters(format!("j must lie in 2..={}, got {j}", eta + 1)));
    }
    if roots.len() < j - 1 {
        return Err(Error::BadParameters(format!("need {} roots, got {}", j - 1, roots.len())));
    }
    for (i, r) in roots.iter().enumerate() {
        if roots[..i].contains(r) {
            return Err(Error::BadParameters(format!("repeated root {r}")));
        }
    }
    let used = &roots[..j - 1];
    let mut a = Poly::linear_root(&used[0]).pow((eta + 2 - j) as u32);
    for r in &used[1..] {
        a = &a * &Poly::linear_root(r);
    }
    let a = -a;
    let eq = RiccatiEq::new(a.clone(), Poly::zero(), a.derivative(), Poly::one())?;
    let mut set = SolutionSet::new(true);
    set.insert(Poly::zero(), Provenance::Seeded);
    for r in used {
        let y = (-&a).exact_div(&Poly::linear_root(r))?;
        debug_assert!(eq.verify_solution(&y));
        set.insert(y, Provenance::Seeded);
    }
    Ok((eq, set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::rat;

    #[test]
    fn eta3_j4() {
        let (eq, set) = gen_extremal(3, 4, &[rat(1), rat(2), rat(3)]).unwrap();
        assert_eq!(eq.a(), &Poly::from_i64(&[6, -11, 6, -1]));
        assert_eq!(set.len(), 4);
        assert!(set.contains(&Poly::from_i64(&[6, -5, 1])));
    }

    #[test]
    fn eta2_j2() {
        let (eq, set) = gen_extremal(2, 2, &[rat(1)]).unwrap();
        assert_eq!(eq.a(), &Poly::from_i64(&[-1, 2, -1]));
        assert_eq!(set.polys(), vec![Poly::zero(), Poly::from_i64(&[-1, 1])]);
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(gen_extremal(3, 5, &[rat(1), rat(2), rat(3), rat(4)]), Err(Error::BadParameters(_))));
        assert!(matches!(gen_extremal(3, 1, &[]), Err(Error::BadParameters(_))));
        assert!(matches!(gen_extremal(3, 3, &[rat(1), rat(1)]), Err(Error::BadParameters(_))));
    }
}
