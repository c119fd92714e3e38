use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::qpoly::{format_rational, frac, rat, to_f64, Rational};

/// Real trigonometric polynomial `a0 + sum_k (cos_k cos(k t) + sin_k sin(k t))`
/// with rational Fourier coefficients.
///
/// `cos` and `sin` have equal length `degree`; the top pair is never both
/// zero, so the zero polynomial has no harmonics.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TrigPoly {
    a0: Rational,
    cos: Vec<Rational>,
    sin: Vec<Rational>,
}

impl TrigPoly {
    pub fn zero() -> Self {
        TrigPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        TrigPoly { a0: c, cos: Vec::new(), sin: Vec::new() }
    }

    /// `cos_coeffs[k-1]` multiplies `cos(k t)`; likewise for `sin_coeffs`.
    pub fn new(a0: Rational, mut cos: Vec<Rational>, mut sin: Vec<Rational>) -> Self {
        let n = cos.len().max(sin.len());
        cos.resize(n, Rational::zero());
        sin.resize(n, Rational::zero());
        let mut t = TrigPoly { a0, cos, sin };
        t.trim();
        t
    }

    pub fn from_i64(a0: i64, cos: &[i64], sin: &[i64]) -> Self {
        TrigPoly::new(
            rat(a0),
            cos.iter().map(|&c| rat(c)).collect(),
            sin.iter().map(|&c| rat(c)).collect(),
        )
    }

    /// `c * cos(k t)`
    pub fn cos_term(c: Rational, k: usize) -> Self {
        if k == 0 {
            return TrigPoly::constant(c);
        }
        let mut cos = vec![Rational::zero(); k];
        cos[k - 1] = c;
        TrigPoly::new(Rational::zero(), cos, Vec::new())
    }

    /// `c * sin(k t)`; zero for `k = 0`.
    pub fn sin_term(c: Rational, k: usize) -> Self {
        if k == 0 {
            return TrigPoly::zero();
        }
        let mut sin = vec![Rational::zero(); k];
        sin[k - 1] = c;
        TrigPoly::new(Rational::zero(), Vec::new(), sin)
    }

    fn trim(&mut self) {
        while self.cos.last().is_some_and(Zero::is_zero) && self.sin.last().is_some_and(Zero::is_zero)
        {
            self.cos.pop();
            self.sin.pop();
        }
    }

    pub fn a0(&self) -> &Rational {
        &self.a0
    }

    pub fn cos_coeffs(&self) -> &[Rational] {
        &self.cos
    }

    pub fn sin_coeffs(&self) -> &[Rational] {
        &self.sin
    }

    /// Coefficient of `cos(k t)`; `k = 0` gives the constant term.
    pub fn cos_k(&self, k: usize) -> Rational {
        match k {
            0 => self.a0.clone(),
            _ => self.cos.get(k - 1).cloned().unwrap_or_else(Rational::zero),
        }
    }

    pub fn sin_k(&self, k: usize) -> Rational {
        match k {
            0 => Rational::zero(),
            _ => self.sin.get(k - 1).cloned().unwrap_or_else(Rational::zero),
        }
    }

    pub fn degree(&self) -> usize {
        self.cos.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cos.is_empty() && self.a0.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.cos.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TrigPoly::new(
            &self.a0 * c,
            self.cos.iter().map(|a| a * c).collect(),
            self.sin.iter().map(|a| a * c).collect(),
        )
    }

    /// d/dt; degree is preserved for nonconstant input.
    pub fn derivative(&self) -> Self {
        let n = self.degree();
        let mut cos = Vec::with_capacity(n);
        let mut sin = Vec::with_capacity(n);
        for k in 1..=n {
            let kk = rat(k as i64);
            cos.push(&self.sin[k - 1] * &kk);
            sin.push(-(&self.cos[k - 1] * &kk));
        }
        TrigPoly::new(Rational::zero(), cos, sin)
    }

    pub fn eval_f64(&self, theta: f64) -> f64 {
        let mut v = to_f64(&self.a0);
        for k in 1..=self.degree() {
            let kt = k as f64 * theta;
            v += to_f64(&self.cos[k - 1]) * kt.cos() + to_f64(&self.sin[k - 1]) * kt.sin();
        }
        v
    }

    /// Exact value at t = 0.
    pub fn value_at_zero(&self) -> Rational {
        self.cos.iter().fold(self.a0.clone(), |acc, c| acc + c)
    }

    /// Canonical order for solution lists: degree, then coefficients from the
    /// top harmonic down (cos before sin), then the constant.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                for k in (0..self.degree()).rev() {
                    let o = self.cos[k].cmp(&other.cos[k]).then(self.sin[k].cmp(&other.sin[k]));
                    if o.is_ne() {
                        return o;
                    }
                }
                std::cmp::Ordering::Equal
            })
            .then_with(|| self.a0.cmp(&other.a0))
    }
}

/// Floating evaluation over a grid; for plotting and CSV output only.
pub fn trig_eval(t: &TrigPoly, theta_grid: &[f64]) -> Vec<f64> {
    theta_grid.iter().map(|&th| t.eval_f64(th)).collect()
}

/// Accumulates `v * cos(h t)` / `v * sin(h t)` for possibly negative `h`.
struct Accum {
    a0: Rational,
    cos: Vec<Rational>,
    sin: Vec<Rational>,
}

impl Accum {
    fn new(n: usize) -> Self {
        Accum { a0: Rational::zero(), cos: vec![Rational::zero(); n], sin: vec![Rational::zero(); n] }
    }

    fn cos(&mut self, h: i64, v: Rational) {
        match h.unsigned_abs() as usize {
            0 => self.a0 += v,
            k => self.cos[k - 1] += v,
        }
    }

    fn sin(&mut self, h: i64, v: Rational) {
        match h {
            0 => {}
            h if h > 0 => self.sin[h as usize - 1] += v,
            h => self.sin[(-h) as usize - 1] -= v,
        }
    }

    fn finish(self) -> TrigPoly {
        TrigPoly::new(self.a0, self.cos, self.sin)
    }
}

impl Add for &TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: &TrigPoly) -> TrigPoly {
        let n = self.degree().max(rhs.degree());
        let pick = |v: &[Rational], k: usize| v.get(k).cloned().unwrap_or_else(Rational::zero);
        TrigPoly::new(
            &self.a0 + &rhs.a0,
            (0..n).map(|k| pick(&self.cos, k) + pick(&rhs.cos, k)).collect(),
            (0..n).map(|k| pick(&self.sin, k) + pick(&rhs.sin, k)).collect(),
        )
    }
}

impl Neg for &TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        self.scale(&-Rational::one())
    }
}

impl Sub for &TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: &TrigPoly) -> TrigPoly {
        self + &(-rhs)
    }
}

/// Product-to-sum expansion; degrees add.
impl Mul for &TrigPoly {
    type Output = TrigPoly;
    fn mul(self, rhs: &TrigPoly) -> TrigPoly {
        let n = self.degree() + rhs.degree();
        let mut acc = Accum::new(n);
        let half = frac(1, 2);
        // (c_j, s_j) for j = 0..=deg with c_0 = a0, s_0 = 0
        let terms = |t: &TrigPoly| -> Vec<(i64, Rational, Rational)> {
            (0..=t.degree()).map(|j| (j as i64, t.cos_k(j), t.sin_k(j))).collect()
        };
        for (j, cj, sj) in terms(self) {
            for (k, ck, sk) in terms(rhs) {
                if !cj.is_zero() && !ck.is_zero() {
                    let v = &cj * &ck * &half;
                    acc.cos(j - k, v.clone());
                    acc.cos(j + k, v);
                }
                if !sj.is_zero() && !sk.is_zero() {
                    let v = &sj * &sk * &half;
                    acc.cos(j - k, v.clone());
                    acc.cos(j + k, -v);
                }
                if !sj.is_zero() && !ck.is_zero() {
                    let v = &sj * &ck * &half;
                    acc.sin(j + k, v.clone());
                    acc.sin(j - k, v);
                }
                if !cj.is_zero() && !sk.is_zero() {
                    let v = &cj * &sk * &half;
                    acc.sin(k + j, v.clone());
                    acc.sin(k - j, v);
                }
            }
        }
        acc.finish()
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TrigPoly {
            type Output = TrigPoly;
            fn $m(self, rhs: TrigPoly) -> TrigPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        -&self
    }
}

/// `1/2 + 1/2*cos(2t) - 3*sin(t)`: constant first, then harmonics ascending
/// with cosine before sine. Parses back through the trig grammar.
impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(Rational, String)> = Vec::new();
        if !self.a0.is_zero() {
            parts.push((self.a0.clone(), String::new()));
        }
        for k in 1..=self.degree() {
            let arg = if k == 1 { "t".to_string() } else { format!("{k}t") };
            if !self.cos[k - 1].is_zero() {
                parts.push((self.cos[k - 1].clone(), format!("cos({arg})")));
            }
            if !self.sin[k - 1].is_zero() {
                parts.push((self.sin[k - 1].clone(), format!("sin({arg})")));
            }
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, atom)) in parts.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if atom.is_empty() {
                f.write_str(&format_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(atom)?;
            } else {
                write!(f, "{}*{atom}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TrigPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cos_squared() {
        let c = TrigPoly::from_i64(0, &[1], &[]);
        let sq = &c * &c;
        assert_eq!(sq, TrigPoly::new(frac(1, 2), vec![rat(0), frac(1, 2)], vec![]));
    }

    #[test]
    fn sin_cos_products() {
        let s = TrigPoly::from_i64(0, &[], &[1]);
        let c = TrigPoly::from_i64(0, &[1], &[]);
        // sin t cos t = 1/2 sin 2t
        assert_eq!(&s * &c, TrigPoly::new(rat(0), vec![], vec![rat(0), frac(1, 2)]));
        // sin^2 + cos^2 = 1
        assert_eq!(&(&s * &s) + &(&c * &c), TrigPoly::constant(rat(1)));
    }

    #[test]
    fn derivative_of_cos_2t() {
        let c2 = TrigPoly::cos_term(rat(1), 2);
        assert_eq!(c2.derivative(), TrigPoly::sin_term(rat(-2), 2));
        assert!(TrigPoly::constant(rat(7)).derivative().is_zero());
    }

    #[test]
    fn degree_of_fixture_a() {
        let a = TrigPoly::from_i64(0, &[], &[5, 8, 5]);
        assert_eq!(a.degree(), 3);
        assert_eq!(a.derivative().degree(), 3);
    }

    #[test]
    fn trailing_zero_pairs_are_trimmed() {
        let t = TrigPoly::from_i64(1, &[2, 0, 0], &[0, 0, 0]);
        assert_eq!(t.degree(), 1);
        assert!(TrigPoly::from_i64(0, &[0], &[0]).is_zero());
    }

    #[test]
    fn float_evaluation() {
        let c = TrigPoly::from_i64(0, &[1], &[]);
        assert_eq!(trig_eval(&c, &[0.0]), vec![1.0]);
        let s = TrigPoly::from_i64(0, &[], &[1]);
        assert!((trig_eval(&s, &[std::f64::consts::FRAC_PI_2])[0] - 1.0).abs() < 1e-12);
        let y2 = TrigPoly::from_i64(10, &[16, 10], &[]);
        assert_eq!(trig_eval(&y2, &[0.0]), vec![36.0]);
    }

    #[test]
    fn display() {
        let t = TrigPoly::new(frac(1, 2), vec![rat(0), frac(1, 2)], vec![rat(-3)]);
        assert_eq!(t.to_string(), "1/2 - 3*sin(t) + 1/2*cos(2t)");
        assert_eq!(TrigPoly::zero().to_string(), "0");
    }
}
