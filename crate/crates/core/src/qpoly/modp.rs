//! Dense polynomials over a small prime field, used by the factorizer.

use num_bigint::BigUint;
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ModPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl ModPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in &mut c {
            *x %= p;
        }
        let mut out = ModPoly { p, c };
        out.trim();
        out
    }

    pub fn one(p: u64) -> Self {
        ModPoly { p, c: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        ModPoly { p, c: vec![0, 1] }
    }

    fn trim(&mut self) {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&lc) => self.scale(inv_mod(lc, self.p)),
        }
    }

    pub fn scale(&self, k: u64) -> Self {
        ModPoly::new(self.p, self.c.iter().map(|&a| a * (k % self.p) % self.p).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| (self.c.get(i).unwrap_or(&0) + o.c.get(i).unwrap_or(&0)) % self.p)
            .collect();
        ModPoly::new(self.p, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| (self.c.get(i).unwrap_or(&0) + self.p - o.c.get(i).unwrap_or(&0)) % self.p)
            .collect();
        ModPoly::new(self.p, c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ModPoly { p: self.p, c: Vec::new() };
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.p;
            }
        }
        ModPoly::new(self.p, c)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial mod p");
        let p = self.p;
        if self.c.len() < d.c.len() {
            return (ModPoly { p, c: Vec::new() }, self.clone());
        }
        let dd = d.degree();
        let inv = inv_mod(*d.c.last().unwrap(), p);
        let mut r = self.c.clone();
        let mut q = vec![0u64; self.c.len() - dd];
        for k in (0..q.len()).rev() {
            let f = r[k + dd] * inv % p;
            if f == 0 {
                continue;
            }
            q[k] = f;
            for (j, &dj) in d.c.iter().enumerate() {
                r[k + j] = (r[k + j] + p - f * dj % p) % p;
            }
        }
        r.truncate(dd);
        (ModPoly::new(p, q), ModPoly::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Bezout cofactors: `s*self + t*o = 1`, inputs coprime.
    pub fn bezout(&self, o: &Self) -> (Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::new(p, vec![]));
        let (mut t0, mut t1) = (ModPoly::new(p, vec![]), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        debug_assert_eq!(r0.degree(), 0, "bezout on non-coprime inputs");
        let inv = inv_mod(r0.c[0], p);
        (s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| a * (i as u64 % self.p) % self.p)
            .collect();
        ModPoly::new(self.p, c)
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut result = ModPoly::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            result = result.mul(&result).rem(m);
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
        }
        result
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs `(product of all irreducible factors of degree d, d)`.
pub(crate) fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ModPoly::x(p);
    let mut h = x.clone();
    let pe = BigUint::from(p);
    let mut d = 0;
    while rest.degree() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&pe, &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.degree() > 0 {
        let deg = rest.degree();
        out.push((rest.monic(), deg));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of irreducibles all of degree
/// `d` (odd `p`).
pub(crate) fn equal_degree<R: Rng>(f: &ModPoly, d: usize, rng: &mut R) -> Vec<ModPoly> {
    if f.degree() == d {
        return vec![f.monic()];
    }
    let p = f.p;
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let n = f.degree();
        let a = ModPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree() == 0 {
            continue;
        }
        let g = a.gcd(f);
        if !g.is_one() && g.degree() < n {
            let h = f.div_rem(&g).0;
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h.monic(), d, rng));
            return out;
        }
        let b = a.pow_mod(&exp, f).sub(&ModPoly::one(p));
        let g = b.gcd(f);
        if !g.is_one() && g.degree() > 0 && g.degree() < n {
            let h = f.div_rem(&g).0;
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h.monic(), d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn ddf_then_edf_splits_completely() {
        // (x-1)(x-2)(x^2+1) over F_7; x^2+1 is irreducible since 7 = 3 mod 4
        let p = 7;
        let f = ModPoly::new(p, vec![2, 4, 1]).mul(&ModPoly::new(p, vec![1, 0, 1]));
        let parts = distinct_degree(&f);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let mut all: Vec<ModPoly> = parts
            .iter()
            .flat_map(|(g, d)| equal_degree(g, *d, &mut rng))
            .collect();
        all.sort_by(|a, b| a.c.cmp(&b.c));
        let prod = all.iter().fold(ModPoly::one(p), |acc, g| acc.mul(g));
        assert_eq!(prod, f.monic());
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|g| g.c.last() == Some(&1)));
    }

    #[test]
    fn bezout_identity() {
        let p = 11;
        let a = ModPoly::new(p, vec![1, 2, 1]);
        let b = ModPoly::new(p, vec![3, 1]);
        let (s, t) = a.bezout(&b);
        assert!(s.mul(&a).add(&t.mul(&b)).is_one());
    }
}
