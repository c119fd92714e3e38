//! Arithmetic in the residue field `Q[x]/(m)` for a monic irreducible `m`.

use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::factor::is_irreducible;
use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueElem {
    modulus: Poly,
    value: Poly,
}

fn check_modulus(modulus: &Poly) -> Result<()> {
    if !modulus.is_monic() {
        return Err(Error::BadModulus(format!("{modulus} is not monic")));
    }
    if !is_irreducible(modulus) {
        return Err(Error::BadModulus(format!("{modulus} is reducible over Q")));
    }
    Ok(())
}

impl ResidueElem {
    pub fn new(value: &Poly, modulus: &Poly) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Self::new_unchecked(value, modulus))
    }

    /// Skips the irreducibility test; for moduli taken from a factorization.
    pub(crate) fn new_unchecked(value: &Poly, modulus: &Poly) -> Self {
        ResidueElem { modulus: modulus.clone(), value: value.rem(modulus).expect("nonzero modulus") }
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn value(&self) -> &Poly {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The rational constant this residue equals, if it is one.
    pub fn as_constant(&self) -> Option<Rational> {
        self.value.is_constant().then(|| self.value.coeff(0))
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = self.value.ext_gcd(&self.modulus).ok()?;
        debug_assert!(g.is_one(), "field modulus makes every nonzero residue a unit");
        Some(Self::new_unchecked(&s, &self.modulus))
    }

    fn lift(&self, value: Poly) -> Self {
        Self::new_unchecked(&value, &self.modulus)
    }
}

impl Add for &ResidueElem {
    type Output = ResidueElem;
    fn add(self, rhs: &ResidueElem) -> ResidueElem {
        self.lift(&self.value + &rhs.value)
    }
}

impl Sub for &ResidueElem {
    type Output = ResidueElem;
    fn sub(self, rhs: &ResidueElem) -> ResidueElem {
        self.lift(&self.value - &rhs.value)
    }
}

impl Mul for &ResidueElem {
    type Output = ResidueElem;
    fn mul(self, rhs: &ResidueElem) -> ResidueElem {
        self.lift(&self.value * &rhs.value)
    }
}

/// The scalar `c` with `c*u + v = 0 (mod modulus)`, when the residue-field
/// solution `-v/u` is a rational constant.
pub fn residue_solve_scalar(u: &Poly, v: &Poly, modulus: &Poly) -> Result<Option<Rational>> {
    check_modulus(modulus)?;
    Ok(residue_solve_unchecked(u, v, modulus))
}

pub(crate) fn residue_solve_unchecked(u: &Poly, v: &Poly, modulus: &Poly) -> Option<Rational> {
    let u = ResidueElem::new_unchecked(u, modulus);
    let v = ResidueElem::new_unchecked(v, modulus);
    let inv = u.inverse()?;
    let zero = ResidueElem::new_unchecked(&Poly::zero(), modulus);
    let c = &(&zero - &v) * &inv;
    let c = c.as_constant()?;
    debug_assert!((&(&u.value.scale(&c) + &v.value).rem(modulus).unwrap()).is_zero());
    Some(if c.is_zero() { Rational::zero() } else { c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::rational::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn linear_modulus() {
        assert_eq!(residue_solve_scalar(&p(&[1]), &p(&[-3]), &p(&[-2, 1])).unwrap(), Some(rat(3)));
    }

    #[test]
    fn quadratic_modulus() {
        let m = p(&[1, 0, 1]);
        assert_eq!(residue_solve_scalar(&p(&[0, 1]), &p(&[0, -2]), &m).unwrap(), Some(rat(2)));
        assert_eq!(residue_solve_scalar(&p(&[0, 1]), &p(&[-1]), &m).unwrap(), None);
    }

    #[test]
    fn zero_u() {
        let m = p(&[-2, 1]);
        assert_eq!(residue_solve_scalar(&p(&[-2, 1]), &p(&[1]), &m).unwrap(), None);
    }

    #[test]
    fn bad_moduli() {
        assert!(matches!(
            residue_solve_scalar(&p(&[1]), &p(&[1]), &p(&[-1, 0, 1])),
            Err(Error::BadModulus(_))
        ));
        assert!(matches!(
            residue_solve_scalar(&p(&[1]), &p(&[1]), &p(&[1, 0, 2])),
            Err(Error::BadModulus(_))
        ));
    }

    #[test]
    fn field_inverse() {
        let m = p(&[-2, 0, 1]);
        let a = ResidueElem::new(&p(&[1, 1]), &m).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!((&a * &inv).value(), &Poly::one());
    }
}
