//! Complete factorization over the rationals.
//!
//! Squarefree decomposition (Yun), then for each squarefree part: reduce
//! modulo a small good prime, split with distinct-degree and Cantor–Zassenhaus
//! equal-degree factorization, Hensel-lift the modular factors past the
//! Mignotte bound, and recombine subsets into true integer factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{distinct_degree, equal_degree, ModPoly};
use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `p = lead * prod(f_i ^ m_i)` with every `f_i` monic, irreducible over Q and
/// pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub lead: Rational,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        self.factors.iter().fold(Poly::constant(self.lead.clone()), |acc, (f, m)| {
            &acc * &f.pow(*m as u32)
        })
    }
}

pub fn factor_irreducible(p: &Poly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::CannotFactorZero);
    }
    let lead = p.leading();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&p.monic()) {
        for f in factor_squarefree(&part) {
            factors.push((f, mult));
        }
    }
    factors.sort();
    Ok(Factorization { lead, factors })
}

/// Distinct rational roots, ascending.
pub fn rational_roots(p: &Poly) -> Result<Vec<Rational>> {
    Ok(rational_roots_with_multiplicity(p)?.into_iter().map(|(r, _)| r).collect())
}

pub fn rational_roots_with_multiplicity(p: &Poly) -> Result<Vec<(Rational, usize)>> {
    if p.is_zero() {
        return Err(Error::UndefinedRoots);
    }
    let mut roots: Vec<(Rational, usize)> = match p.degree() {
        Some(0) => Vec::new(),
        Some(1) => vec![(-p.coeff(0) / p.coeff(1), 1)],
        _ => factor_irreducible(p)?
            .factors
            .into_iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, m)| (-f.coeff(0), m))
            .collect(),
    };
    roots.sort();
    Ok(roots)
}

pub fn is_irreducible(p: &Poly) -> bool {
    match p.degree() {
        None | Some(0) => false,
        Some(1) => true,
        _ => factor_irreducible(p)
            .map(|f| f.factors.len() == 1 && f.factors[0].1 == 1)
            .unwrap_or(false),
    }
}

/// Yun's algorithm on a monic polynomial: `(a_i, i)` with `p = prod a_i^i`.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp).expect("nonconstant input");
    let mut b = p.exact_div(&a0).expect("gcd divides").monic();
    let mut c = dp.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d).expect("b nonzero");
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides").monic();
        c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

type IntPoly = Vec<BigInt>;

fn ip_trim(mut v: IntPoly) -> IntPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn ip_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ip_trim(out)
}

fn ip_sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.len().max(b.len());
    ip_trim(
        (0..n)
            .map(|i| {
                a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()
            })
            .collect(),
    )
}

fn ip_mod(a: &IntPoly, m: &BigInt) -> IntPoly {
    ip_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn ip_symmetric(a: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    ip_trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn ip_scale(a: &IntPoly, k: &BigInt) -> IntPoly {
    ip_trim(a.iter().map(|c| c * k).collect())
}

fn ip_to_modp(a: &IntPoly, p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    ModPoly::new(p, a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn modp_to_ip(a: &ModPoly) -> IntPoly {
    a.c.iter().map(|&c| BigInt::from(c)).collect()
}

fn ip_content(a: &IntPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn ip_primitive(a: &IntPoly) -> IntPoly {
    let mut g = ip_content(a);
    if a.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

/// Exact quotient over Z when `d` divides `a`.
fn ip_exact_div(a: &IntPoly, d: &IntPoly) -> Option<IntPoly> {
    let dd = d.len() - 1;
    if a.len() < d.len() {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let lc = d.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for k in (0..q.len()).rev() {
        let (f, rem) = r[k + dd].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (j, dj) in d.iter().enumerate() {
            r[k + j] -= &f * dj;
        }
        q[k] = f;
    }
    if r.iter().all(Zero::is_zero) {
        Some(ip_trim(q))
    } else {
        None
    }
}

fn int_to_poly(a: &IntPoly) -> Poly {
    Poly::from_coeffs(a.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

/// Odd primes below 2^15, plenty for discriminants at desk-scale degrees.
fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..1 << 15)
        .step_by(2)
        .filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Monic irreducible factors of a monic squarefree polynomial.
fn factor_squarefree(f: &Poly) -> Vec<Poly> {
    if f.degree().unwrap_or(0) <= 1 {
        return vec![f.clone()];
    }
    let (_, prim) = f.content_primitive();
    let n = prim.len() - 1;
    let lc = prim[n].clone();

    // Pick the good prime (lc unit, squarefree image) with the fewest
    // modular factors among the first few candidates.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    for p in odd_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = ip_to_modp(&prim, p);
        if fp.degree() != n || !fp.gcd(&fp.derivative()).is_one() {
            continue;
        }
        let monic = fp.monic();
        let mut parts = Vec::new();
        for (g, d) in distinct_degree(&monic) {
            parts.extend(equal_degree(&g, d, &mut rng));
        }
        if best.as_ref().is_none_or(|(_, b)| parts.len() < b.len()) {
            best = Some((p, parts));
        }
        tried += 1;
        if tried >= 5 || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    let (p, modular) = best.expect("some small prime is good for a squarefree polynomial");
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // Mignotte: every integer factor of prim has coefficients below
    // 2^n * ||prim||_2; scaled by lc for the recombination trick.
    let norm2: BigInt = prim.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (norm2.sqrt() + 1u32) * lc.abs();
    let mut modulus = BigInt::from(p);
    let mut k = 1u32;
    while modulus <= &bound * 2 {
        modulus *= p;
        k += 1;
    }
    let lifted = hensel_lift(&prim, &modular, p, k);

    let mut out = recombine(&prim, lifted, &modulus);
    out.sort();
    out
}

/// Lift `f = lc(f) * prod(factors) mod p` to the same identity modulo `p^k`,
/// keeping every factor monic.
fn hensel_lift(f: &IntPoly, factors: &[ModPoly], p: u64, k: u32) -> Vec<IntPoly> {
    let m = BigInt::from(p).pow(k);
    lift_tree(&ip_mod(f, &m), factors, p, k, &m)
}

fn lift_tree(f: &IntPoly, factors: &[ModPoly], p: u64, k: u32, m: &BigInt) -> Vec<IntPoly> {
    let lc = f.last().unwrap().clone();
    if factors.len() == 1 {
        // f = lc * g mod p^k
        let inv = lc.modinv(m).expect("leading coefficient is a unit");
        return vec![ip_mod(&ip_scale(f, &inv), m)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let g0 = left.iter().fold(ModPoly::one(p), |acc, g| acc.mul(g));
    let lcp = (&lc % BigInt::from(p)).to_u64().unwrap();
    let h0 = right.iter().fold(ModPoly::one(p), |acc, g| acc.mul(g)).scale(lcp);
    let (g, h) = lift_pair(f, &g0, &h0, p, k, m);
    let mut out = lift_tree(&g, left, p, k, m);
    out.extend(lift_tree(&h, right, p, k, m));
    out
}

/// Linear Hensel lifting of `f = g*h mod p` (g monic) to modulus `p^k`.
fn lift_pair(
    f: &IntPoly,
    g0: &ModPoly,
    h0: &ModPoly,
    p: u64,
    k: u32,
    m: &BigInt,
) -> (IntPoly, IntPoly) {
    let (s, t) = g0.bezout(h0);
    let mut g = modp_to_ip(g0);
    let mut h = modp_to_ip(h0);
    let mut pj = BigInt::from(p);
    for _ in 1..k {
        let next = &pj * p;
        let diff = ip_mod(&ip_sub(f, &ip_mul(&g, &h)), &next);
        let e: IntPoly = diff.iter().map(|c| c / &pj).collect();
        let ep = ip_to_modp(&e, p);
        let gp = ip_to_modp(&g, p);
        let hp = ip_to_modp(&h, p);
        let (q, sigma) = ep.mul(&t).div_rem(&gp);
        let tau = ep.mul(&s).add(&q.mul(&hp));
        g = ip_mod(&add_scaled(&g, &modp_to_ip(&sigma), &pj), &next);
        h = ip_mod(&add_scaled(&h, &modp_to_ip(&tau), &pj), &next);
        pj = next;
    }
    debug_assert_eq!(&pj, m);
    (g, h)
}

fn add_scaled(a: &IntPoly, b: &IntPoly, k: &BigInt) -> IntPoly {
    let n = a.len().max(b.len());
    ip_trim(
        (0..n)
            .map(|i| {
                a.get(i).cloned().unwrap_or_default() + k * b.get(i).cloned().unwrap_or_default()
            })
            .collect(),
    )
}

/// Zassenhaus recombination with the leading-coefficient trick; returns the
/// monic rational factors.
fn recombine(f: &IntPoly, lifted: Vec<IntPoly>, m: &BigInt) -> Vec<Poly> {
    let mut remaining: Vec<IntPoly> = lifted;
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        let lc = f.last().unwrap().clone();
        let lc_poly = vec![lc.clone()];
        for subset in Subsets::new(remaining.len(), s) {
            let g = subset
                .iter()
                .fold(lc_poly.clone(), |acc, &i| ip_mod(&ip_mul(&acc, &remaining[i]), m));
            let g = ip_symmetric(&g, m);
            let h = (0..remaining.len())
                .filter(|i| !subset.contains(i))
                .fold(lc_poly.clone(), |acc, i| ip_mod(&ip_mul(&acc, &remaining[i]), m));
            let h = ip_symmetric(&h, m);
            if ip_mul(&g, &h) == ip_scale(&f, &lc) {
                let gp = ip_primitive(&g);
                out.push(int_to_poly(&gp).monic());
                f = ip_exact_div(&f, &gp).expect("true factor divides");
                f = ip_primitive(&f);
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
                continue 'outer;
            }
        }
        s += 1;
    }
    if f.len() > 1 {
        out.push(int_to_poly(&f).monic());
    }
    out
}

/// k-subsets of `0..n` in lexicographic order.
struct Subsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::rational::{frac, rat};

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn x4_minus_1() {
        let f = factor_irreducible(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.lead, rat(1));
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1), (p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn x2_plus_1_is_irreducible() {
        let f = factor_irreducible(&p(&[1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[1, 0, 1]), 1)]);
        assert!(is_irreducible(&p(&[1, 0, 1])));
        assert!(!is_irreducible(&p(&[-1, 0, 1])));
    }

    #[test]
    fn repeated_roots_with_negative_lead() {
        // -(x-1)^2 (x-2)
        let q = -(p(&[-1, 1]).pow(2) * p(&[-2, 1]));
        let f = factor_irreducible(&q).unwrap();
        assert_eq!(f.lead, rat(-1));
        assert_eq!(f.factors, vec![(p(&[-2, 1]), 1), (p(&[-1, 1]), 2)]);
        assert_eq!(f.expand(), q);
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(factor_irreducible(&Poly::zero()), Err(Error::CannotFactorZero));
        assert_eq!(rational_roots(&Poly::zero()), Err(Error::UndefinedRoots));
    }

    #[test]
    fn roots_examples() {
        assert_eq!(rational_roots(&p(&[1, -3, 2])).unwrap(), vec![frac(1, 2), rat(1)]);
        assert!(rational_roots(&p(&[1, 0, 1])).unwrap().is_empty());
        assert_eq!(rational_roots(&p(&[0, -1, 0, 1])).unwrap(), vec![rat(-1), rat(0), rat(1)]);
        assert!(rational_roots(&p(&[5])).unwrap().is_empty());
    }

    #[test]
    fn swinnerton_dyer_style_hard_case() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits modulo every prime.
        let q = p(&[1, 0, -10, 0, 1]);
        let f = factor_irreducible(&q).unwrap();
        assert_eq!(f.factors, vec![(q.clone(), 1)]);
    }

    #[test]
    fn product_of_quadratics_and_cubic() {
        let a = p(&[2, 0, 1]); // x^2+2
        let b = p(&[-3, 1, 0, 1]); // x^3+x-3
        let c = Poly::from_coeffs(vec![frac(1, 3), rat(1)]); // x+1/3
        let q = (&a * &b * &c).scale(&frac(-7, 5));
        let f = factor_irreducible(&q).unwrap();
        assert_eq!(f.lead, frac(-7, 5));
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.expand(), q);
        for (g, m) in &f.factors {
            assert_eq!(*m, 1);
            assert!(g.is_monic());
        }
    }

    #[test]
    fn high_degree_split() {
        // prod_{i=1}^{8} (x - i) * (x^2 + x + 1)^2
        let mut q = p(&[1, 1, 1]).pow(2);
        for i in 1..=8 {
            q = &q * &p(&[-i, 1]);
        }
        let f = factor_irreducible(&q).unwrap();
        assert_eq!(f.factors.len(), 9);
        assert_eq!(f.expand(), q);
        assert_eq!(rational_roots(&q).unwrap(), (1..=8).map(rat).collect::<Vec<_>>());
    }

    #[test]
    fn squarefree_parts() {
        // (x-1)^3 (x+2)
        let q = p(&[-1, 1]).pow(3) * p(&[2, 1]);
        let parts = squarefree_decomposition(&q);
        assert_eq!(parts, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 3)]);
    }
}
