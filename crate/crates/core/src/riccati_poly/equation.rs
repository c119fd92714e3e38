use std::fmt;

use crate::error::{Error, Result};
use crate::qpoly::Poly;

/// `a(x) y' = b0(x) + b1(x) y + b2(x) y^2` over Q.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RiccatiEq {
    a: Poly,
    b0: Poly,
    b1: Poly,
    b2: Poly,
    eta: usize,
}

impl RiccatiEq {
    pub fn new(a: Poly, b0: Poly, b1: Poly, b2: Poly) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::DegenerateEquation);
        }
        if b2.is_zero() {
            return Err(Error::LinearEquation);
        }
        let eta = [&a, &b0, &b1, &b2].iter().filter_map(|p| p.degree()).max().unwrap_or(0);
        Ok(RiccatiEq { a, b0, b1, b2, eta })
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b0(&self) -> &Poly {
        &self.b0
    }

    pub fn b1(&self) -> &Poly {
        &self.b1
    }

    pub fn b2(&self) -> &Poly {
        &self.b2
    }

    pub fn eta(&self) -> usize {
        self.eta
    }

    pub fn is_reduced(&self) -> bool {
        self.b0.is_zero()
    }

    /// Largest possible degree of a polynomial solution: `eta - deg b2`.
    pub fn degree_bound(&self) -> usize {
        self.eta - self.b2.deg()
    }

    /// Most solutions a polynomial Riccati equation of this degree can have.
    pub fn count_bound(&self) -> usize {
        if self.eta == 0 {
            2
        } else {
            self.eta + 1
        }
    }

    /// `a y' - b0 - b1 y - b2 y^2`.
    pub fn residual(&self, y: &Poly) -> Poly {
        let lhs = &self.a * &y.derivative();
        let rhs = &(&self.b0 + &(&self.b1 * y)) + &(&self.b2 * &(y * y));
        &lhs - &rhs
    }

    pub fn verify_solution(&self, y: &Poly) -> bool {
        self.residual(y).is_zero()
    }

    /// The equivalent equation for `w = y - y0`, which has `b0 = 0`.
    pub fn reduce_equation(&self, y0: &Poly) -> Result<RiccatiEq> {
        if !self.verify_solution(y0) {
            return Err(Error::NotASolution(y0.to_string()));
        }
        let b1 = &self.b1 + &(&self.b2 * y0).scale(&crate::qpoly::rat(2));
        RiccatiEq::new(self.a.clone(), Poly::zero(), b1, self.b2.clone())
    }
}

/// Free function form of [`RiccatiEq::degree_bound`].
pub fn degree_bound(eq: &RiccatiEq) -> usize {
    eq.degree_bound()
}

pub fn verify_solution(eq: &RiccatiEq, y: &Poly) -> bool {
    eq.verify_solution(y)
}

pub fn reduce_equation(eq: &RiccatiEq, y0: &Poly) -> Result<RiccatiEq> {
    eq.reduce_equation(y0)
}

impl fmt::Display for RiccatiEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) y' = ({}) + ({}) y + ({}) y^2", self.a, self.b0, self.b1, self.b2)
    }
}

impl fmt::Debug for RiccatiEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RiccatiEq[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    fn x_nu_eq(nu: usize) -> RiccatiEq {
        let mut b1 = vec![0i64; nu + 1];
        b1[0] = nu as i64;
        b1[nu] = -1;
        RiccatiEq::new(p(&[0, 1]), Poly::zero(), p(&b1), p(&[1])).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(RiccatiEq::new(Poly::zero(), p(&[1]), p(&[1]), p(&[1])), Err(Error::DegenerateEquation));
        assert_eq!(RiccatiEq::new(p(&[1]), p(&[1]), p(&[1]), Poly::zero()), Err(Error::LinearEquation));
    }

    #[test]
    fn bounds() {
        let eq = x_nu_eq(3);
        assert_eq!(eq.eta(), 3);
        assert_eq!(eq.degree_bound(), 3);
        let eq = RiccatiEq::new(p(&[1, 0, 0, 1]), Poly::zero(), p(&[1]), p(&[0, 0, 1])).unwrap();
        assert_eq!(eq.degree_bound(), 1);
    }

    #[test]
    fn x_to_the_nu_solves() {
        let eq = x_nu_eq(3);
        assert!(eq.verify_solution(&Poly::monomial(rat(1), 3)));
        assert!(!eq.verify_solution(&Poly::monomial(rat(1), 2)));
        assert!(eq.verify_solution(&Poly::zero()));
    }

    #[test]
    fn reduction_by_known_solution() {
        // y' = (1 - x^2) + y^2 has y0 = x
        let eq = RiccatiEq::new(p(&[1]), p(&[1, 0, -1]), Poly::zero(), p(&[1])).unwrap();
        let red = eq.reduce_equation(&p(&[0, 1])).unwrap();
        assert!(red.is_reduced());
        assert_eq!(red.b1(), &p(&[0, 2]));
        // b0 alone carried the top degree, so the reduced equation is smaller
        assert_eq!((eq.eta(), red.eta()), (2, 1));
        assert!(matches!(eq.reduce_equation(&p(&[1])), Err(Error::NotASolution(_))));
    }
}
