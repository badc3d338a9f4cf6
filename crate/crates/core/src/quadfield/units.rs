//! Units and principal ideals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::{class_group, Element, Field, Ideal, DEFAULT_SEARCH_LIMIT};
use crate::algebra::arith::exact_sqrt;
use crate::algebra::cf_sqrt;
use crate::error::{Error, Result};

/// The fundamental unit `eps > 1` of a real quadratic field.
pub fn fundamental_unit(field: Field) -> Result<Element> {
    if !field.is_real_quadratic() {
        return Err(Error::NotTotallyReal);
    }
    let cf = cf_sqrt(field.d())?;
    for (p, q) in cf.convergents() {
        let n = cf.norm_at(&p, &q);
        if n.abs().is_one() {
            return Ok(if cf.half {
                Element::from_ints(field, &p - &q, q)
            } else {
                Element::from_ints(field, p, q)
            });
        }
    }
    unreachable!("convergent iterator is infinite")
}

/// Generator of the roots of unity and its order `w`.
pub fn torsion_generator(field: Field) -> (Element, u32) {
    match field.d() {
        -1 => (Element::omega(field), 4),
        -3 => (Element::omega(field), 6),
        _ => (Element::from_int(field, -1), 2),
    }
}

pub fn is_principal(field: Field, ideal: &Ideal) -> Result<Option<Element>> {
    is_principal_with_limit(field, ideal, DEFAULT_SEARCH_LIMIT)
}

/// A generator of `ideal` when it is principal. Real fields: the search
/// covers `sqrt(N) <= |alpha| < eps*sqrt(N)`, which every principal ideal
/// meets; imaginary fields: all elements of norm `N`.
pub fn is_principal_with_limit(
    field: Field,
    ideal: &Ideal,
    limit: u64,
) -> Result<Option<Element>> {
    assert_eq!(field, ideal.field(), "{}", Error::FieldMismatch);
    if let Some(n) = ideal.as_rational_principal() {
        return Ok(Some(Element::from_int(field, n)));
    }
    if let Ok(cl) = class_group(field) {
        if !ideal.class_is_trivial(&cl) {
            return Ok(None);
        }
    }
    let n = ideal.norm();
    let d = BigInt::from(field.d());
    let ymax: BigInt = if field.is_imaginary() {
        // |d| y^2 <= 4N covers both bases
        (BigInt::from(4) * &n / d.abs()).sqrt() + 1
    } else {
        let eps = fundamental_unit(field)?;
        let (a, b) = eps.sqrt_coords();
        let sd = d.sqrt();
        let eps_up = (a + b * BigInt::from(&sd + 1u32)).ceil().to_integer();
        let num = (eps_up + 1) * (n.sqrt() + 1);
        // |y| <= (|alpha| + |alpha'|)/sqrt d in either basis
        &num / &sd + 1
    };
    let steps = ymax.to_u64().filter(|&s| s <= limit).ok_or_else(|| {
        Error::LimitExceeded(format!("principality search over |y| <= {ymax}"))
    })?;
    let (t, _) = field.omega_relation();
    let four_n = BigInt::from(4) * &n;
    for k in 0..=steps as i64 {
        for y in if k == 0 { vec![0] } else { vec![k, -k] } {
            let y = BigInt::from(y);
            let dy2 = &d * &y * &y;
            for sign in [1, -1] {
                let target = if t == 0 {
                    &n * sign + &dy2
                } else {
                    // (2x + y)^2 = 4(+-N) + d y^2
                    &four_n * sign + &dy2
                };
                let Some(r) = exact_sqrt(&target) else {
                    continue;
                };
                for r in [r.clone(), -r] {
                    let x = if t == 0 {
                        r
                    } else {
                        let twice = &r - &y;
                        if twice.is_odd() {
                            continue;
                        }
                        twice / 2
                    };
                    let alpha = Element::from_ints(field, x, y.clone());
                    if ideal.contains(&alpha) {
                        return Ok(Some(alpha));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::{make_field, primes_above};
    use num_rational::BigRational;

    #[test]
    fn fundamental_units() {
        let k = make_field(2).unwrap();
        assert_eq!(fundamental_unit(k).unwrap(), Element::from_ints(k, 1, 1));
        let k = make_field(3).unwrap();
        assert_eq!(fundamental_unit(k).unwrap(), Element::from_ints(k, 2, 1));
        let k = make_field(5).unwrap();
        assert_eq!(fundamental_unit(k).unwrap(), Element::omega(k));
        // (3 + sqrt 13)/2 = 1 + w, not its square
        let k = make_field(13).unwrap();
        assert_eq!(fundamental_unit(k).unwrap(), Element::from_ints(k, 1, 1));
        assert_eq!(fundamental_unit(make_field(-6).unwrap()), Err(Error::NotTotallyReal));
    }

    #[test]
    fn principality() {
        let k = make_field(2).unwrap();
        let p3 = primes_above(k, 3).unwrap()[0].ideal();
        assert_eq!(is_principal(k, &p3).unwrap(), Some(Element::from_int(k, 3)));
        assert_eq!(is_principal(k, &Ideal::unit(k)).unwrap(), Some(Element::one(k)));
        let p7 = primes_above(k, 7).unwrap()[0].ideal();
        let g = is_principal(k, &p7).unwrap().unwrap();
        assert_eq!(g.norm().abs(), BigRational::from_integer(7.into()));
        assert_eq!(Ideal::principal(&g).unwrap(), p7);
        let k6 = make_field(-6).unwrap();
        let p2 = primes_above(k6, 2).unwrap()[0].ideal();
        assert_eq!(is_principal(k6, &p2).unwrap(), None);
        let g = is_principal(k6, &p2.pow(2)).unwrap().unwrap();
        assert_eq!(g.norm(), BigRational::from_integer(4.into()));
    }
}
