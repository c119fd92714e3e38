use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, rat, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals, ascending coefficients.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `c * x^d`
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Poly::from_coeffs(coeffs)
    }

    /// Monic `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Poly::from_coeffs(vec![-r.clone(), Rational::one()])
    }

    /// `1 + x^2`, the denominator of the half-angle substitution.
    pub fn one_plus_x2() -> Self {
        Poly::from_i64(&[1, 0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for bookkeeping where
    /// the zero case is handled separately.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// `p(a*x + b)`
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Poly {
        let inner = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        self.compose(&inner)
    }

    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let Some(nd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if nd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let inv_lc = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] * &inv_lc;
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self`; `NotDivisible` otherwise.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            // keep intermediate sizes in check
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Monic gcd `g` with Bezout cofactors `s*self + t*other = g`.
    pub fn ext_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.leading().recip();
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero());
        }
        let g = self.gcd(other)?;
        Ok((self * other).exact_div(&g)?.monic())
    }

    /// Largest `s` with `factor^s | self`, and the cofactor. `self` must be
    /// nonzero and `factor` nonconstant.
    pub fn strip_factor(&self, factor: &Poly) -> (Poly, usize) {
        debug_assert!(!self.is_zero() && !factor.is_constant());
        let mut cur = self.clone();
        let mut s = 0;
        while let Ok(q) = cur.exact_div(factor) {
            cur = q;
            s += 1;
        }
        (cur, s)
    }

    /// Integer content and primitive part: `self = content * primitive` with
    /// `primitive` having coprime integer coefficients and positive leading
    /// coefficient.
    pub fn content_primitive(&self) -> (Rational, Vec<num_bigint::BigInt>) {
        use num_bigint::BigInt;
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    /// Canonical order: by degree (zero first), then coefficients from the
    /// leading one down.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            self.coeffs
                .iter()
                .rev()
                .zip(other.coeffs.iter().rev())
                .map(|(a, b)| a.cmp(b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Human form, highest degree first: `-x^3 + 3/2*x - 1`. Parses back through
/// the expression grammar.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => f.write_str(&format_rational(&mag))?,
                _ => {
                    if !unit {
                        write!(f, "{}*", format_rational(&mag))?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::rational::frac;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn binomial_square() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
    }

    #[test]
    fn derivative_of_cube() {
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert_eq!(p(&[5]).derivative(), Poly::zero());
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[1, 0, 1]).exact_div(&p(&[-1, 1])), Err(Error::NotDivisible));
        assert_eq!(p(&[1]).exact_div(&Poly::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&Poly::zero()).unwrap(), p(&[1, 2]).monic());
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Err(Error::UndefinedGcd));
        // (x-2)(x-3) and (x-1)(x-3) share x-3
        let y1 = p(&[6, -5, 1]);
        let y2 = p(&[3, -4, 1]);
        assert_eq!(y1.gcd(&y2).unwrap(), p(&[-3, 1]));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[1, 0, 1]);
        let b = p(&[0, 3, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b).unwrap();
        assert!(g.is_one());
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn eval_and_compose() {
        let q = p(&[1, -3, 2]);
        assert_eq!(q.eval(&frac(1, 2)), rat(0));
        // q(2x+1) = 2(2x+1)^2 - 3(2x+1) + 1 = 8x^2 + 2x
        assert_eq!(q.compose_linear(&rat(2), &rat(1)), p(&[0, 2, 8]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 0, 1]).to_string(), "x^2 + 1");
        let q = Poly::from_coeffs(vec![rat(1), frac(-3, 2), rat(1)]);
        assert_eq!(q.to_string(), "x^2 - 3/2*x + 1");
        assert_eq!(p(&[6, -11, 6, -1]).to_string(), "-x^3 + 6*x^2 - 11*x + 6");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn content_and_primitive_part() {
        let q = Poly::from_coeffs(vec![frac(1, 2), frac(-3, 4)]);
        let (c, prim) = q.content_primitive();
        assert_eq!(c, frac(-1, 4));
        let prim: Vec<i64> = prim.iter().map(|b| i64::try_from(b).unwrap()).collect();
        assert_eq!(prim, vec![-2, 3]);
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![p(&[0, 1]), Poly::zero(), p(&[3]), p(&[-1, 1]), p(&[1, 0, 1])];
        v.sort();
        assert_eq!(v, vec![Poly::zero(), p(&[3]), p(&[-1, 1]), p(&[0, 1]), p(&[1, 0, 1])]);
    }
}
