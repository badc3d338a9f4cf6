//! Polynomials over a prime field F_p and their factorisation
//! (square-free, distinct-degree, then Cantor-Zassenhaus equal-degree).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::arith::{is_prime, pow_mod};
use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// Seed for the equal-degree splitting step; fixed so factor lists are reproducible.
const EDF_SEED: u64 = 0x5eed_f00d_0003;

/// Polynomial over F_p, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_int(f: &IntPolynomial, p: u64) -> Self {
        let bp = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&bp).to_u64().unwrap_or(0))
            .collect();
        Self::new(p, coeffs)
    }

    fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        self.scale(inv)
    }

    fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&c| mulm(c, k, self.p)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        Self::new(self.p, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(self.p - 1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.p, vec![]);
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + mulm(a, b, self.p)) % self.p;
            }
        }
        Self::new(self.p, c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let p = self.p;
        let mut r = self.coeffs.clone();
        let dd = d.deg();
        if r.len() < d.coeffs.len() {
            return (Self::new(p, vec![]), self.clone());
        }
        let inv = inv_mod(d.leading(), p);
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = mulm(r[k + dd], inv, p);
            q[k] = coef;
            if coef == 0 {
                continue;
            }
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let t = mulm(coef, dc, p);
                r[k + j] = (r[k + j] + p - t) % p;
            }
        }
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulm(c, i as u64 % self.p, self.p))
            .collect();
        Self::new(self.p, c)
    }

    pub fn pow_mod(&self, mut exp: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::constant(self.p, 1).rem(m);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            exp >>= 1;
        }
        acc
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::constant(self.p, 1), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mulm(acc, x, self.p) + c) % self.p)
    }

    /// f(x) = g(x^p); returns g. Only valid when f' = 0.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let c = self.coeffs.iter().step_by(p).copied().collect();
        Self::new(self.p, c)
    }

    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(_) => {
                let fs = factor_monic(&self.monic());
                fs.len() == 1 && fs[0].1 == 1
            }
        }
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ip = IntPolynomial::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect());
        write!(f, "{ip} (mod {})", self.p)
    }
}

/// Factorisation of a polynomial over F_p into monic irreducibles with
/// multiplicities, sorted by degree, linear factors by increasing root.
pub fn factor_mod_p(f: &IntPolynomial, p: u64) -> Result<Vec<(FpPoly, u32)>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let fp = FpPoly::from_int(f, p);
    if fp.is_zero() {
        return Err(Error::ZeroPolynomial(p));
    }
    Ok(factor_monic(&fp.monic()))
}

fn factor_monic(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let mut out = Vec::new();
    for (sqf, mult) in squarefree_decomposition(f) {
        for (g, d) in distinct_degree(&sqf) {
            for h in equal_degree(&g, d) {
                out.push((h, mult));
            }
        }
    }
    // degree first, then negated coefficients: linear factors come out by increasing root
    let key = |f: &FpPoly| -> (usize, Vec<u64>) {
        (f.deg(), f.coeffs.iter().map(|&c| (f.p - c) % f.p).collect())
    };
    out.sort_by(|a, b| (key(&a.0), a.1).cmp(&(key(&b.0), b.1)));
    out
}

/// Square-free decomposition of a monic polynomial: pairs (g_i, i) with
/// f = prod g_i^i and each g_i square-free.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.p;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let fd = f.derivative();
    if fd.is_zero() {
        for (g, m) in squarefree_decomposition(&f.pth_root()) {
            out.push((g, m * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&fd);
    let mut w = f.div_rem(&c).0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if z.deg() > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if c.deg() > 0 {
        for (g, m) in squarefree_decomposition(&c.pth_root().monic()) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Distinct-degree factorisation of a square-free monic polynomial.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let dr = rest.deg();
        out.push((rest, dr));
    }
    out
}

/// Splits a monic product of distinct irreducibles of degree `d`.
fn equal_degree(f: &FpPoly, d: usize) -> Vec<FpPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED ^ (f.p << 8) ^ d as u64);
    let mut out = Vec::new();
    split_equal_degree(f, d, &mut rng, &mut out);
    out
}

fn split_equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let n = f.deg();
    if n == d {
        out.push(f.monic());
        return;
    }
    let p = f.p;
    loop {
        let len = n;
        let a = FpPoly::new(p, (0..len).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((p^d - 1)/2) as (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.pow_mod(p, f);
                acc = acc.mul(&t).rem(f);
            }
            acc.pow_mod((p - 1) / 2, f).sub(&FpPoly::constant(p, 1))
        };
        let g = f.gcd(&b);
        if g.deg() > 0 && g.deg() < n {
            let h = f.div_rem(&g).0.monic();
            split_equal_degree(&g, d, rng, out);
            split_equal_degree(&h, d, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[u64]) -> FpPoly {
        FpPoly::new(p, c.to_vec())
    }

    /// Roots of f in F_p by exhaustion, independent of the factoriser.
    fn roots_by_search(f: &FpPoly) -> Vec<u64> {
        (0..f.modulus()).filter(|&x| f.eval(x) == 0).collect()
    }

    #[test]
    fn x2_minus_2_mod_7_splits() {
        let f = IntPolynomial::from_i64(&[-2, 0, 1]);
        assert_eq!(roots_by_search(&FpPoly::from_int(&f, 7)), vec![3, 4]);
        let fs = factor_mod_p(&f, 7).unwrap();
        assert_eq!(fs, vec![(fp(7, &[4, 1]), 1), (fp(7, &[3, 1]), 1)]); // x - 3, x - 4
    }

    #[test]
    fn x2_minus_2_mod_3_irreducible() {
        let f = IntPolynomial::from_i64(&[-2, 0, 1]);
        assert!(roots_by_search(&FpPoly::from_int(&f, 3)).is_empty());
        let fs = factor_mod_p(&f, 3).unwrap();
        assert_eq!(fs, vec![(fp(3, &[1, 0, 1]), 1)]);
    }

    #[test]
    fn repeated_root() {
        let f = IntPolynomial::from_i64(&[0, 0, 1]);
        assert_eq!(factor_mod_p(&f, 5).unwrap(), vec![(fp(5, &[0, 1]), 2)]);
    }

    #[test]
    fn errors() {
        let f = IntPolynomial::from_i64(&[1, 1]);
        assert_eq!(factor_mod_p(&f, 9), Err(Error::NotPrime(9)));
        let g = IntPolynomial::from_i64(&[5, 10]);
        assert_eq!(factor_mod_p(&g, 5), Err(Error::ZeroPolynomial(5)));
    }

    #[test]
    fn inseparable_in_char_p() {
        // x^4 + 1 = (x + 1)^4 over F_2 and x^3 - 5 = x^3 over F_5
        let f = IntPolynomial::from_i64(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_mod_p(&f, 2).unwrap(), vec![(fp(2, &[1, 1]), 4)]);
        let g = IntPolynomial::from_i64(&[-5, 0, 0, 1]);
        assert_eq!(factor_mod_p(&g, 5).unwrap(), vec![(fp(5, &[0, 1]), 3)]);
        // x^6 - 1 = (x - 1)^3 (x + 1)^3 over F_3
        let h = IntPolynomial::from_i64(&[-1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(
            factor_mod_p(&h, 3).unwrap(),
            vec![(fp(3, &[2, 1]), 3), (fp(3, &[1, 1]), 3)]
        );
    }

    #[test]
    fn deterministic_output() {
        let f = IntPolynomial::from_i64(&[3, 1, 4, 1, 5, 9, 2]);
        assert_eq!(factor_mod_p(&f, 97).unwrap(), factor_mod_p(&f, 97).unwrap());
    }
}
