//! Dedekind's index criterion and an irreducibility test over Q.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::arith::is_prime;
use super::{factor_mod_p, FpPoly, IntPolynomial};
use crate::error::{Error, Result};

fn lift(f: &FpPoly) -> Vec<BigInt> {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Whether `q` is coprime to the index `[O_K : Z[theta]]`, `theta` a root of
/// the monic irreducible `f`. When it is, factoring `f` mod `q` gives the
/// splitting of `q`.
pub fn index_coprime(f: &IntPolynomial, q: u64) -> Result<bool> {
    if f.leading().is_none_or(|c| !c.is_one()) {
        return Err(Error::PreconditionViolated("Dedekind criterion needs a monic polynomial".into()));
    }
    let factors = factor_mod_p(f, q)?;
    let mut g = vec![BigInt::one()];
    let mut h = vec![BigInt::one()];
    for (fac, e) in &factors {
        let l = lift(fac);
        g = mul(&g, &l);
        for _ in 1..*e {
            h = mul(&h, &l);
        }
    }
    let gh = mul(&g, &h);
    let bq = BigInt::from(q);
    let n = f.coeffs().len().max(gh.len());
    let mut big_f = Vec::with_capacity(n);
    for i in 0..n {
        let a = f.coeffs().get(i).cloned().unwrap_or_default();
        let b = gh.get(i).cloned().unwrap_or_default();
        let diff = a - b;
        debug_assert!((&diff % &bq).is_zero());
        big_f.push(diff / &bq);
    }
    let red = |v: Vec<BigInt>| FpPoly::from_int(&IntPolynomial::new(v), q);
    let (fb, gb, hb) = (red(big_f), red(g), red(h));
    let d = fb.gcd(&gb).gcd(&hb);
    Ok(d.degree() == Some(0))
}

/// Irreducibility over Q. Rational roots decide degree <= 3; higher degrees
/// intersect the possible factor degrees read off from factorisations mod
/// small primes and report `IrreducibilityUndecided` if that leaves a gap.
pub fn is_irreducible_over_q(f: &IntPolynomial) -> Result<bool> {
    let n = match f.degree() {
        None | Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(n) => n,
    };
    if !f.rational_roots()?.is_empty() {
        return Ok(false);
    }
    if n <= 3 {
        return Ok(true);
    }
    let mut possible: BTreeSet<usize> = (1..n).collect();
    for p in (3u64..2000).filter(|&p| is_prime(p)) {
        let lc = f.leading().unwrap();
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let facs = factor_mod_p(f, p)?;
        if facs.iter().any(|(_, e)| *e > 1) {
            continue;
        }
        let mut sums: BTreeSet<usize> = BTreeSet::from([0]);
        for (g, _) in &facs {
            let d = g.degree().unwrap_or(0);
            let shifted: Vec<usize> = sums.iter().map(|s| s + d).collect();
            sums.extend(shifted);
        }
        possible.retain(|d| sums.contains(d));
        if possible.is_empty() {
            return Ok(true);
        }
    }
    Err(Error::IrreducibilityUndecided)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedekind_examples() {
        let f = IntPolynomial::from_i64(&[-5, 0, 0, 1]);
        assert!(index_coprime(&f, 5).unwrap());
        assert!(index_coprime(&f, 3).unwrap());
        // x^2 - 5: Z[sqrt 5] has index 2 in the maximal order
        assert!(!index_coprime(&IntPolynomial::from_i64(&[-5, 0, 1]), 2).unwrap());
        assert!(index_coprime(&IntPolynomial::from_i64(&[-2, 0, 1]), 2).unwrap());
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible_over_q(&IntPolynomial::from_i64(&[-5, 0, 0, 1])).unwrap());
        assert!(!is_irreducible_over_q(&IntPolynomial::from_i64(&[-8, 0, 0, 1])).unwrap());
        assert!(is_irreducible_over_q(&IntPolynomial::from_i64(&[-2, 0, 0, 0, 0, 1])).unwrap());
        // (x^2 + 1)(x^3 + x + 1) has no rational root
        let f = IntPolynomial::from_i64(&[1, 1, 1, 2, 0, 1]);
        assert!(!is_irreducible_over_q(&f).unwrap_or(false));
    }
}
