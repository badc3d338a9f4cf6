//! Dense univariate polynomials with integer coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients in ascending degree. The zero polynomial
/// has no coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    /// Rational roots, by the rational root theorem. Only practical for
    /// desk-scale constant and leading coefficients.
    pub fn rational_roots(&self) -> Result<Vec<BigRational>> {
        let Some(deg) = self.degree() else {
            return Err(Error::PreconditionViolated("roots of the zero polynomial".into()));
        };
        let mut roots = Vec::new();
        if deg == 0 {
            return Ok(roots);
        }
        // strip factors of x
        let shift = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if shift > 0 {
            roots.push(BigRational::zero());
        }
        let c0 = self.coeffs[shift].abs();
        let lead = self.coeffs[deg].abs();
        let divs = |n: &BigInt| -> Result<Vec<BigInt>> {
            let m = crate::algebra::arith::to_i64(n)?;
            if m > 1_000_000_000_000 {
                return Err(Error::LimitExceeded("rational root search".into()));
            }
            let mut out = Vec::new();
            let mut d = 1i64;
            while d * d <= m {
                if m % d == 0 {
                    out.push(BigInt::from(d));
                    if d * d != m {
                        out.push(BigInt::from(m / d));
                    }
                }
                d += 1;
            }
            Ok(out)
        };
        let nums = divs(&c0)?;
        let dens = divs(&lead)?;
        for n in &nums {
            for d in &dens {
                if !n.gcd(d).is_one() {
                    continue;
                }
                for s in [BigInt::one(), -BigInt::one()] {
                    let r = BigRational::new(n * &s, d.clone());
                    if self.eval_rat(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        Ok(roots)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// Parses sums of monomials like `x^3 - 5`, `2*x^2 + x - 1` or `3x`.
impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            let bad = || Error::Parse(format!("bad term `{term}` in `{s}`"));
            let (coeff, power) = match body.find('x') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let head = body[..pos].trim_end_matches('*');
                    let c = if head.is_empty() {
                        BigInt::one()
                    } else {
                        head.parse::<BigInt>().map_err(|_| bad())?
                    };
                    let tail = &body[pos + 1..];
                    let e = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|t| t.parse::<usize>().ok())
                            .ok_or_else(bad)?
                    };
                    (c, e)
                }
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += coeff * sign;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let f: IntPolynomial = "x^3 - 5".parse().unwrap();
        assert_eq!(f, IntPolynomial::from_i64(&[-5, 0, 0, 1]));
        assert_eq!(f.to_string(), "x^3 - 5");
        let g: IntPolynomial = "-2x^2+x-1".parse().unwrap();
        assert_eq!(g, IntPolynomial::from_i64(&[-1, 1, -2]));
        assert_eq!(g.to_string(), "-2*x^2 + x - 1");
        assert!("x^".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn degree_and_zero() {
        assert_eq!(IntPolynomial::from_i64(&[0, 0]).degree(), None);
        assert_eq!(IntPolynomial::from_i64(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn rational_roots() {
        let f = IntPolynomial::from_i64(&[-1, 0, 2]); // 2x^2 - 1
        assert!(f.rational_roots().unwrap().is_empty());
        let g = IntPolynomial::from_i64(&[-3, 5, -2]); // -(2x-3)(x-1)
        let roots = g.rational_roots().unwrap();
        assert_eq!(
            roots,
            vec![BigRational::from_integer(1.into()), BigRational::new(3.into(), 2.into())]
        );
    }
}
