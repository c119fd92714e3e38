//! The half-angle isomorphism between trigonometric polynomials and reduced
//! rational functions `f(x) / (1+x^2)^nu`, with `x = tan(t/2)`.
//!
//! Both directions go through the Laurent basis `z = e^{it}`: with
//! `1 + ix = 2z/(z+1)` and `1 - ix = 2/(z+1)` every coefficient becomes
//! bookkeeping over the Gaussian rationals.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::trigpoly::TrigPoly;
use crate::error::{Error, Result};
use crate::qpoly::{frac, rat, Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Gauss {
    re: Rational,
    im: Rational,
}

impl Gauss {
    fn new(re: Rational, im: Rational) -> Self {
        Gauss { re, im }
    }
    fn real(re: Rational) -> Self {
        Gauss { re, im: Rational::zero() }
    }
    fn zero() -> Self {
        Gauss::real(Rational::zero())
    }
}

impl Add for &Gauss {
    type Output = Gauss;
    fn add(self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &Gauss {
    type Output = Gauss;
    fn sub(self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss::new(-&self.re, -&self.im)
    }
}

impl Mul for &Gauss {
    type Output = Gauss;
    fn mul(self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

/// Dense ascending polynomial with Gaussian-rational coefficients.
type GPoly = Vec<Gauss>;

fn gmul(a: &GPoly, b: &GPoly) -> GPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Gauss::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn gpowers(base: &GPoly, n: usize) -> Vec<GPoly> {
    let mut out = vec![vec![Gauss::real(Rational::one())]];
    for k in 1..=n {
        let next = gmul(&out[k - 1], base);
        out.push(next);
    }
    out
}

/// `numerator / (1+x^2)^nu` with `gcd(numerator, 1+x^2) = 1` and
/// `deg numerator <= 2 nu`: the image of a trigonometric polynomial of
/// degree exactly `nu`. Zero is `(0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatForm {
    numerator: Poly,
    nu: usize,
}

impl RatForm {
    pub fn zero() -> Self {
        RatForm { numerator: Poly::zero(), nu: 0 }
    }

    /// Validates without reducing.
    pub fn try_new(numerator: Poly, nu: usize) -> Result<Self> {
        if numerator.is_zero() {
            return Ok(RatForm::zero());
        }
        let degree = numerator.deg();
        if degree > 2 * nu {
            return Err(Error::NotATrigPoly { degree, nu });
        }
        if Poly::one_plus_x2().divides(&numerator) {
            return Err(Error::NotReduced);
        }
        Ok(RatForm { numerator, nu })
    }

    /// Cancels every common power of `1+x^2`, then validates.
    pub fn reduced(numerator: Poly, nu: usize) -> Result<Self> {
        if numerator.is_zero() {
            return Ok(RatForm::zero());
        }
        let q = Poly::one_plus_x2();
        let mut num = numerator;
        let mut nu = nu;
        while nu > 0 {
            match num.exact_div(&q) {
                Ok(n) => {
                    num = n;
                    nu -= 1;
                }
                Err(_) => break,
            }
        }
        RatForm::try_new(num, nu)
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RatForm::zero();
        }
        RatForm { numerator: self.numerator.scale(c), nu: self.nu }
    }

    fn lifted(&self, nu: usize) -> Poly {
        &self.numerator * &Poly::one_plus_x2().pow((nu - self.nu) as u32)
    }

    pub fn add(&self, other: &Self) -> Self {
        let nu = self.nu.max(other.nu);
        RatForm::reduced(&self.lifted(nu) + &other.lifted(nu), nu).expect("sum stays in range")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatForm::reduced(&self.numerator * &other.numerator, self.nu + other.nu)
            .expect("product stays in range")
    }
}

/// Image of `t` under `cos t -> (1-x^2)/(1+x^2)`, `sin t -> 2x/(1+x^2)`.
pub fn phi_forward(t: &TrigPoly) -> RatForm {
    if t.is_zero() {
        return RatForm::zero();
    }
    let nu = t.degree();
    let half = frac(1, 2);
    // f_0 = a0, f_{+-k} = (a_k -+ i b_k) / 2
    let coeff = |k: i64| -> Gauss {
        let j = k.unsigned_abs() as usize;
        if j == 0 {
            return Gauss::real(t.a0().clone());
        }
        let a = &t.cos_k(j) * &half;
        let b = &t.sin_k(j) * &half;
        if k > 0 {
            Gauss::new(a, -b)
        } else {
            Gauss::new(a, b)
        }
    };
    let one = Rational::one();
    let plus = gpowers(&vec![Gauss::real(one.clone()), Gauss::new(Rational::zero(), one.clone())], 2 * nu);
    let minus = gpowers(&vec![Gauss::real(one.clone()), Gauss::new(Rational::zero(), -one)], 2 * nu);
    let mut f = vec![Gauss::zero(); 2 * nu + 1];
    let n = nu as i64;
    for k in -n..=n {
        let fk = coeff(k);
        if fk == Gauss::zero() {
            continue;
        }
        let term = gmul(&plus[(n + k) as usize], &minus[(n - k) as usize]);
        for (i, c) in term.iter().enumerate() {
            f[i] = &f[i] + &(&fk * c);
        }
    }
    debug_assert!(f.iter().all(|c| c.im.is_zero()), "conjugate symmetry gives a real numerator");
    let numerator = Poly::from_coeffs(f.into_iter().map(|c| c.re).collect());
    let form = RatForm::try_new(numerator, nu).expect("degree-nu image is already reduced");
    debug_assert_eq!(form.nu, nu);
    form
}

/// Inverse of [`phi_forward`].
pub fn phi_inverse(r: &RatForm) -> TrigPoly {
    if r.is_zero() {
        return TrigPoly::zero();
    }
    let nu = r.nu;
    // P(z) = sum_j f_j (-i)^j (z-1)^j (z+1)^(2nu-j);  F = P(z) / (4^nu z^nu)
    let zm1 = gpowers(&vec![Gauss::real(rat(-1)), Gauss::real(rat(1))], 2 * nu);
    let zp1 = gpowers(&vec![Gauss::real(rat(1)), Gauss::real(rat(1))], 2 * nu);
    let mut minus_i_pow = Gauss::real(rat(1));
    let minus_i = Gauss::new(rat(0), rat(-1));
    let mut p = vec![Gauss::zero(); 2 * nu + 1];
    for j in 0..=2 * nu {
        let fj = r.numerator.coeff(j);
        if !fj.is_zero() {
            let scale = &minus_i_pow * &Gauss::real(fj);
            let term = gmul(&zm1[j], &zp1[2 * nu - j]);
            for (i, c) in term.iter().enumerate() {
                p[i] = &p[i] + &(&scale * c);
            }
        }
        minus_i_pow = &minus_i_pow * &minus_i;
    }
    let inv4 = Rational::one() / Rational::from_integer(num_bigint::BigInt::from(4).pow(nu as u32));
    let two = rat(2);
    let a0 = &p[nu].re * &inv4;
    let mut cos = Vec::with_capacity(nu);
    let mut sin = Vec::with_capacity(nu);
    for k in 1..=nu {
        let fk = &p[nu + k];
        cos.push(&fk.re * &inv4 * &two);
        sin.push(-(&fk.im * &inv4 * &two));
    }
    TrigPoly::new(a0, cos, sin)
}

/// Strict form of [`phi_inverse`] on raw parts.
pub fn phi_inverse_parts(numerator: Poly, nu: usize) -> Result<TrigPoly> {
    Ok(phi_inverse(&RatForm::try_new(numerator, nu)?))
}

/// Image of the t-derivative: `((1+x^2)/2) d/dx` applied to `r`.
pub fn phi_derivative_transport(r: &RatForm) -> RatForm {
    if r.is_zero() {
        return RatForm::zero();
    }
    let f = &r.numerator;
    let nu = r.nu;
    let x = Poly::x();
    let raw = &(&f.derivative() * &Poly::one_plus_x2()) - &(&x * f).scale(&rat(2 * nu as i64));
    RatForm::reduced(raw.scale(&frac(1, 2)), nu).expect("derivative keeps degree")
}
