//! Continued fractions of quadratic irrationals.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Zero};

use super::arith::is_squarefree;
use crate::error::{Error, Result};

/// Expansion `[a0; period, period, ...]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfExpansion {
    pub d: i64,
    /// True when the expanded number is `(1 + sqrt d)/2` rather than `sqrt d`.
    pub half: bool,
    pub a0: i64,
    pub period: Vec<i64>,
}

impl CfExpansion {
    /// Partial quotient `a_k` (k = 0 is the leading term).
    pub fn term(&self, k: usize) -> i64 {
        if k == 0 {
            self.a0
        } else {
            self.period[(k - 1) % self.period.len()]
        }
    }

    /// Iterator over convergents `(p_k, q_k)`, k = 0, 1, ...
    pub fn convergents(&self) -> Convergents<'_> {
        Convergents {
            cf: self,
            k: 0,
            p: (BigInt::one(), BigInt::zero()),
            q: (BigInt::zero(), BigInt::one()),
        }
    }

    /// Norm form at a convergent: `p^2 - d q^2`, or `p^2 - pq - (d-1)/4 q^2`
    /// in the half-integral case (the norm of `(p - q) + q*w`).
    pub fn norm_at(&self, p: &BigInt, q: &BigInt) -> BigInt {
        if self.half {
            p * p - p * q - BigInt::from((self.d - 1) / 4) * q * q
        } else {
            p * p - BigInt::from(self.d) * q * q
        }
    }
}

pub struct Convergents<'a> {
    cf: &'a CfExpansion,
    k: usize,
    // (current, previous)
    p: (BigInt, BigInt),
    q: (BigInt, BigInt),
}

impl Iterator for Convergents<'_> {
    type Item = (BigInt, BigInt);

    fn next(&mut self) -> Option<Self::Item> {
        let a = BigInt::from(self.cf.term(self.k));
        let p = &a * &self.p.0 + &self.p.1;
        let q = &a * &self.q.0 + &self.q.1;
        self.p = (p.clone(), std::mem::take(&mut self.p.0));
        self.q = (q.clone(), std::mem::take(&mut self.q.0));
        self.k += 1;
        Some((p, q))
    }
}

/// Expansion of `sqrt d`, or of `(1 + sqrt d)/2` when `d = 1 mod 4`.
pub fn cf_sqrt(d: i64) -> Result<CfExpansion> {
    if d <= 1 || !is_squarefree(d) {
        return Err(Error::NotSquareFree(d));
    }
    let half = d.rem_euclid(4) == 1;
    let s = d.sqrt();
    // state (P, Q) stands for (P + sqrt d)/Q
    let (mut pp, mut qq) = if half { (1i64, 2i64) } else { (0, 1) };
    let step = |pp: i64, qq: i64| {
        let a = Integer::div_floor(&(pp + s), &qq);
        let np = a * qq - pp;
        let nq = (d - np * np) / qq;
        (a, np, nq)
    };
    let (a0, np, nq) = step(pp, qq);
    pp = np;
    qq = nq;
    let start = (pp, qq);
    let mut period = Vec::new();
    loop {
        let (a, np, nq) = step(pp, qq);
        period.push(a);
        pp = np;
        qq = nq;
        if (pp, qq) == start {
            break;
        }
    }
    Ok(CfExpansion { d, half, a0, period })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_expansions() {
        let e = cf_sqrt(2).unwrap();
        assert_eq!((e.a0, e.period.clone()), (1, vec![2]));
        let e = cf_sqrt(3).unwrap();
        assert_eq!((e.a0, e.period.clone()), (1, vec![1, 2]));
        let e = cf_sqrt(5).unwrap();
        assert!(e.half);
        assert_eq!((e.a0, e.period.clone()), (1, vec![1]));
        let e = cf_sqrt(7).unwrap();
        assert_eq!((e.a0, e.period.clone()), (2, vec![1, 1, 1, 4]));
        assert!(matches!(cf_sqrt(12), Err(Error::NotSquareFree(12))));
    }

    #[test]
    fn period_end_gives_unit() {
        for d in [2, 3, 5, 6, 7, 13, 61, 94, 109] {
            let e = cf_sqrt(d).unwrap();
            let (p, q) = e.convergents().nth(e.period.len() - 1).unwrap();
            let n = e.norm_at(&p, &q);
            assert!(n == BigInt::one() || n == -BigInt::one(), "d = {d}");
        }
    }
}
