//! Integer and rational helpers: primality, valuations, roots, square-freeness.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n == w {
            return true;
        }
        if n % w == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Trial-division factorisation of `|n|`, ascending primes.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of a nonzero big integer. Fails when a cofactor
/// above `10^12` resists trial division up to `10^6`.
pub fn prime_divisors(n: &BigInt) -> Result<Vec<u64>> {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_zero() {
        return Err(Error::PreconditionViolated("prime divisors of 0".into()));
    }
    let mut p = 2u64;
    while p <= 1_000_000 {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        if (&m % &bp).is_zero() {
            out.push(p);
            while (&m % &bp).is_zero() {
                m /= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > BigInt::one() {
        match m.to_u64() {
            Some(r) if is_prime(r) => out.push(r),
            _ => {
                return Err(Error::LimitExceeded(format!(
                    "cannot factor cofactor {m} by trial division"
                )))
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// p-adic valuation of a nonzero integer; `None` for zero.
pub fn valuation_int(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let bp = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&bp);
        if !r.is_zero() {
            return Some(v);
        }
        m = q;
        v += 1;
    }
}

/// p-adic valuation of a nonzero rational; `None` for zero.
pub fn valuation_rat(q: &BigRational, p: u64) -> Option<i64> {
    let num = valuation_int(q.numer(), p)?;
    let den = valuation_int(q.denom(), p).unwrap_or(0);
    Some(num as i64 - den as i64)
}

pub fn is_squarefree(n: i64) -> bool {
    if n == 0 {
        return false;
    }
    factor_u64(n.unsigned_abs()).iter().all(|&(_, e)| e == 1)
}

/// The square-free integer with the same sign whose quotient by `n` is a square.
pub fn squarefree_part(n: i64) -> i64 {
    let core: i64 = factor_u64(n.unsigned_abs())
        .iter()
        .filter(|(_, e)| e % 2 == 1)
        .map(|&(p, _)| p as i64)
        .product();
    if n < 0 {
        -core
    } else {
        core
    }
}

/// Exact square root of a non-negative integer, if it is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact cube root of an integer (any sign), if it is a perfect cube.
pub fn exact_cbrt(n: &BigInt) -> Option<BigInt> {
    let r = n.cbrt();
    (&r * &r * &r == *n).then_some(r)
}

/// `r` with `r^3 = q`, when `q` is the cube of a rational.
pub fn rational_cube_root(q: &BigRational) -> Option<BigRational> {
    let n = exact_cbrt(q.numer())?;
    let d = exact_cbrt(q.denom())?;
    Some(BigRational::new(n, d))
}

/// Kronecker symbol `(D / p)` for a prime `p`.
pub fn kronecker(disc: i64, p: u64) -> i32 {
    if p == 2 {
        return match disc.rem_euclid(8) {
            0 | 2 | 4 | 6 => 0,
            1 | 7 => 1,
            _ => -1,
        };
    }
    let a = disc.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Least common multiple of the denominators of the given rationals.
pub fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Floor division for big integers with a positive divisor.
pub fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

pub fn to_i64(n: &BigInt) -> Result<i64> {
    n.to_i64()
        .ok_or_else(|| Error::LimitExceeded(format!("{n} does not fit in 64 bits")))
}

pub fn sign_of(n: &BigInt) -> i32 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn primality_small_and_large() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn cube_roots() {
        assert_eq!(rational_cube_root(&q(8, 1)), Some(q(2, 1)));
        assert_eq!(rational_cube_root(&q(-27, 8)), Some(q(-3, 2)));
        assert_eq!(rational_cube_root(&q(4, 1)), None);
        assert_eq!(rational_cube_root(&q(0, 1)), Some(q(0, 1)));
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(2));
        assert!(is_squarefree(-87));
        assert!(!is_squarefree(12));
        assert_eq!(squarefree_part(-27), -3);
        assert_eq!(squarefree_part(-6), -6);
        assert_eq!(squarefree_part(72), 2);
    }

    #[test]
    fn kronecker_symbol() {
        assert_eq!(kronecker(8, 3), -1);
        assert_eq!(kronecker(8, 7), 1);
        assert_eq!(kronecker(12, 3), 0);
        assert_eq!(kronecker(5, 2), -1);
        assert_eq!(kronecker(17, 2), 1);
        assert_eq!(kronecker(-87, 2), 1);
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation_rat(&q(243, 2), 3), Some(5));
        assert_eq!(valuation_rat(&q(2, 27), 3), Some(-3));
        assert_eq!(valuation_rat(&q(0, 1), 3), None);
    }
}
