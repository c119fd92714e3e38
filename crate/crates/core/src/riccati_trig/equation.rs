use std::fmt;

use crate::error::{Error, Result};
use crate::qpoly::{rat, Poly};
use crate::riccati_poly::RiccatiEq;
use crate::trigring::{phi_forward, RatForm, TrigPoly};

/// `A(t) Y' = B0 + B1 Y + B2 Y^2` with trigonometric-polynomial coefficients,
/// together with the images of the coefficients under `x = tan(t/2)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TrigRiccatiEq {
    a: TrigPoly,
    b0: TrigPoly,
    b1: TrigPoly,
    b2: TrigPoly,
    eta: usize,
    x_side: [RatForm; 4],
}

impl TrigRiccatiEq {
    pub fn new(a: TrigPoly, b0: TrigPoly, b1: TrigPoly, b2: TrigPoly) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::DegenerateEquation);
        }
        if b2.is_zero() {
            return Err(Error::LinearEquation);
        }
        let eta = [&a, &b0, &b1, &b2].iter().map(|t| t.degree()).max().unwrap_or(0);
        let x_side = [phi_forward(&a), phi_forward(&b0), phi_forward(&b1), phi_forward(&b2)];
        Ok(TrigRiccatiEq { a, b0, b1, b2, eta, x_side })
    }

    pub fn a(&self) -> &TrigPoly {
        &self.a
    }

    pub fn b0(&self) -> &TrigPoly {
        &self.b0
    }

    pub fn b1(&self) -> &TrigPoly {
        &self.b1
    }

    pub fn b2(&self) -> &TrigPoly {
        &self.b2
    }

    pub fn eta(&self) -> usize {
        self.eta
    }

    /// Images of `A, B0, B1, B2` as `f(x) / (1+x^2)^nu`.
    pub fn x_side(&self) -> &[RatForm; 4] {
        &self.x_side
    }

    pub fn is_reduced(&self) -> bool {
        self.b0.is_zero()
    }

    /// Largest possible degree of a trigonometric-polynomial solution.
    pub fn degree_bound(&self) -> usize {
        self.eta - self.b2.degree()
    }

    /// Most solutions an equation of this degree can have (`2 eta`, or 3 when
    /// `eta = 1`; constant equations have at most the two roots of a quadratic).
    pub fn count_bound(&self) -> usize {
        trig_count_bound(self.eta)
    }

    /// `A Y' - B0 - B1 Y - B2 Y^2`, exactly in Fourier coefficients.
    pub fn residual(&self, y: &TrigPoly) -> TrigPoly {
        let lhs = &self.a * &y.derivative();
        let rhs = &(&self.b0 + &(&self.b1 * y)) + &(&self.b2 * &(y * y));
        &lhs - &rhs
    }

    pub fn verify_solution(&self, y: &TrigPoly) -> bool {
        self.residual(y).is_zero()
    }

    /// The equivalent equation for `W = Y - Y0`, which has `B0 = 0`.
    pub fn reduce(&self, y0: &TrigPoly) -> Result<TrigRiccatiEq> {
        if !self.verify_solution(y0) {
            return Err(Error::NotASolution(y0.to_string()));
        }
        let b1 = &self.b1 + &(&self.b2 * y0).scale(&rat(2));
        TrigRiccatiEq::new(self.a.clone(), TrigPoly::zero(), b1, self.b2.clone())
    }

    /// Polynomial Riccati equation in `w` whose solutions of degree at most
    /// `2m` are exactly the numerators `w` of solutions `W = w / (1+x^2)^m`
    /// of degree at most `m`.
    ///
    /// With `x' = (1+x^2)/2`, the identity
    /// `a (w'(1+x^2) - 2 m x w) / (2 q^(alpha+m)) = b0/q^beta0 + b1 w/q^(beta1+m) + b2 w^2/q^(beta2+2m)`
    /// is multiplied through by `2 q^N`.
    pub fn transport_to_x(&self, m: usize) -> RiccatiEq {
        let q = Poly::one_plus_x2();
        let [a, b0, b1, b2] = &self.x_side;
        let (alpha, beta0, beta1, beta2) = (a.nu(), b0.nu(), b1.nu(), b2.nu());
        let n = (alpha + m).max(beta0).max(beta1 + m).max(beta2 + 2 * m);
        let two = rat(2);
        let qp = |e: usize| q.pow(e as u32);
        let ta = a.numerator() * &qp(n - alpha - m + 1);
        let tb0 = (b0.numerator() * &qp(n - beta0)).scale(&two);
        let drift = (&(&Poly::x() * a.numerator()) * &qp(n - alpha - m)).scale(&rat(2 * m as i64));
        let tb1 = &(b1.numerator() * &qp(n - beta1 - m)).scale(&two) + &drift;
        let tb2 = (b2.numerator() * &qp(n - beta2 - 2 * m)).scale(&two);
        RiccatiEq::new(ta, tb0, tb1, tb2).expect("a and b2 are nonzero")
    }
}

pub fn trig_count_bound(eta: usize) -> usize {
    match eta {
        0 => 2,
        1 => 3,
        e => 2 * e,
    }
}

pub fn trig_degree_bound(eq: &TrigRiccatiEq) -> usize {
    eq.degree_bound()
}

pub fn verify_trig_solution(eq: &TrigRiccatiEq, y: &TrigPoly) -> bool {
    eq.verify_solution(y)
}

pub fn reduce_trig(eq: &TrigRiccatiEq, y0: &TrigPoly) -> Result<TrigRiccatiEq> {
    eq.reduce(y0)
}

pub fn transport_to_x(eq: &TrigRiccatiEq, m: usize) -> RiccatiEq {
    eq.transport_to_x(m)
}

impl fmt::Display for TrigRiccatiEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) Y' = ({}) + ({}) Y + ({}) Y^2", self.a, self.b0, self.b1, self.b2)
    }
}

impl fmt::Debug for TrigRiccatiEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TrigRiccatiEq[{self}]")
    }
}
