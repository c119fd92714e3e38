//! Sparse multivariate polynomials over Q in a fixed number of variables.
//! Only what the undetermined-coefficient solver needs: ring operations,
//! substitution, exact division, and Sylvester resultants.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;

type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut out = MPoly::zero(nvars);
        if !c.is_zero() {
            out.terms.insert(vec![0; nvars], c);
        }
        out
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut out = MPoly::zero(nvars);
        out.terms.insert(m, Rational::one());
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Variables with a nonzero exponent somewhere.
    pub fn vars_present(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m[i] > 0))
            .collect()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m[i]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = MPoly::constant(self.nvars, Rational::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Coefficients of `self` viewed as a polynomial in variable `i`,
    /// indexed by the power of `i`.
    pub fn coeffs_in(&self, i: usize) -> Vec<MPoly> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![MPoly::zero(self.nvars); d + 1];
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let k = rest[i] as usize;
            rest[i] = 0;
            out[k].add_term(rest, c.clone());
        }
        out
    }

    /// As a univariate polynomial in variable `i`; `None` if any other
    /// variable is present.
    pub fn to_univariate(&self, i: usize) -> Option<Poly> {
        if self.vars_present().iter().any(|&j| j != i) {
            return None;
        }
        let d = self.degree_in(i) as usize;
        let mut coeffs = vec![Rational::zero(); d + 1];
        for (m, c) in &self.terms {
            coeffs[m[i] as usize] = c.clone();
        }
        Some(Poly::from_coeffs(coeffs))
    }

    pub fn substitute_value(&self, i: usize, value: &Rational) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let k = rest[i];
            rest[i] = 0;
            let mut f = c.clone();
            for _ in 0..k {
                f *= value;
            }
            out.add_term(rest, f);
        }
        out
    }

    /// Replace variable `i` by the polynomial `expr` (which must not
    /// contain `i`).
    pub fn substitute_poly(&self, i: usize, expr: &MPoly) -> Self {
        let coeffs = self.coeffs_in(i);
        let mut out = MPoly::zero(self.nvars);
        for c in coeffs.iter().rev() {
            out = &(&out * expr) + c;
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.iter().zip(point).fold(c.clone(), |acc, (&e, x)| {
                    (0..e).fold(acc, |a, _| a * x)
                })
            })
            .sum()
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient under lex order, `None` if `d` does not divide.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        let (dm, dc) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading() {
            if rm.iter().zip(dm).any(|(a, b)| a < b) {
                return None;
            }
            let m: Monomial = rm.iter().zip(dm).map(|(a, b)| a - b).collect();
            let c = rc / dc;
            let mut t = MPoly::zero(self.nvars);
            t.terms.insert(m.clone(), c.clone());
            rem = &rem - &(&t * d);
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Sylvester resultant with respect to variable `i`.
    pub fn resultant(&self, other: &MPoly, i: usize) -> MPoly {
        let n = self.nvars;
        let a = self.coeffs_in(i);
        let b = other.coeffs_in(i);
        let (da, db) = (a.len() - 1, b.len() - 1);
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(n);
        }
        if da == 0 {
            return a[0].pow(db as u32);
        }
        if db == 0 {
            return b[0].pow(da as u32);
        }
        let size = da + db;
        let mut m = vec![vec![MPoly::zero(n); size]; size];
        for r in 0..db {
            for (k, c) in a.iter().rev().enumerate() {
                m[r][r + k] = c.clone();
            }
        }
        for r in 0..da {
            for (k, c) in b.iter().rev().enumerate() {
                m[db + r][r + k] = c.clone();
            }
        }
        bareiss_det(m, n)
    }
}

fn bareiss_det(mut m: Vec<Vec<MPoly>>, nvars: usize) -> MPoly {
    let n = m.len();
    let mut sign = Rational::one();
    let mut prev = MPoly::constant(nvars, Rational::one());
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return MPoly::zero(nvars);
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(&sign)
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}
