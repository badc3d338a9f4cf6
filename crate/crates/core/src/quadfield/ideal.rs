use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Element, Field};
use crate::error::{Error, Result};

/// Nonzero integral ideal as the lattice `Z*a + Z*(b + c*w)` in Hermite
/// normal form: `a, c > 0`, `c | a`, `c | b`, `0 <= b < a`.
/// Over `Q` only `a` is meaningful.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    field: Field,
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Ideal {
    pub(crate) fn from_hnf(field: Field, a: BigInt, b: BigInt, c: BigInt) -> Self {
        debug_assert!(a.is_positive() && c.is_positive());
        debug_assert!((&a % &c).is_zero() && (&b % &c).is_zero());
        Ideal { field, a, b, c }
    }

    pub(crate) fn rational(n: BigInt) -> Self {
        Ideal { field: Field::rational(), a: n.abs(), b: BigInt::zero(), c: BigInt::one() }
    }

    pub fn unit(field: Field) -> Self {
        Self::from_hnf(field, BigInt::one(), BigInt::zero(), BigInt::one())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// HNF entries `(a, b, c)`.
    pub fn hnf(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub fn norm(&self) -> BigInt {
        if self.field.is_rational() {
            self.a.clone()
        } else {
            &self.a * &self.c
        }
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Largest rational integer dividing the ideal.
    pub fn content(&self) -> BigInt {
        if self.field.is_rational() {
            self.a.clone()
        } else {
            self.c.clone()
        }
    }

    /// Ideal generated by the given integral elements.
    pub fn from_generators(field: Field, gens: &[Element]) -> Result<Self> {
        let mut coords = Vec::new();
        for g in gens {
            let (x, y) = g.integral_coords().ok_or_else(|| {
                Error::PreconditionViolated(format!("generator {g} is not integral"))
            })?;
            if field.is_rational() {
                coords.push((x, y));
                continue;
            }
            let gw = g * &Element::omega(field);
            let (xw, yw) = gw.integral_coords().expect("integral");
            coords.push((x, y));
            coords.push((xw, yw));
        }
        if field.is_rational() {
            let a = coords.iter().fold(BigInt::zero(), |acc, (x, _)| acc.gcd(x));
            if a.is_zero() {
                return Err(Error::PreconditionViolated("zero ideal".into()));
            }
            return Ok(Self::rational(a));
        }
        Self::hnf_of(field, coords)
    }

    pub fn principal(x: &Element) -> Result<Self> {
        Self::from_generators(x.field(), std::slice::from_ref(x))
    }

    fn hnf_of(field: Field, vectors: Vec<(BigInt, BigInt)>) -> Result<Self> {
        let mut w: Option<(BigInt, BigInt)> = None;
        let mut xs = BigInt::zero();
        for (vx, vy) in vectors {
            if vy.is_zero() {
                xs = xs.gcd(&vx);
                continue;
            }
            match w.take() {
                None => w = Some((vx, vy)),
                Some((wx, wy)) => {
                    let eg = wy.extended_gcd(&vy);
                    let g = eg.gcd;
                    let nx = &eg.x * &wx + &eg.y * &vx;
                    // combination with zero w-coordinate
                    let zx = (&vy / &g) * &wx - (&wy / &g) * &vx;
                    xs = xs.gcd(&zx);
                    w = Some((nx, g));
                }
            }
        }
        let (mut wx, mut wy) = w.ok_or_else(|| Error::PreconditionViolated("degenerate lattice".into()))?;
        if xs.is_zero() {
            return Err(Error::PreconditionViolated("degenerate lattice".into()));
        }
        if wy.is_negative() {
            wx = -wx;
            wy = -wy;
        }
        let a = xs.abs();
        let b = wx.mod_floor(&a);
        Ok(Self::from_hnf(field, a, b, wy))
    }

    /// Z-basis `[a, b + c*w]`.
    pub fn basis(&self) -> [Element; 2] {
        [
            Element::from_int(self.field, self.a.clone()),
            Element::from_ints(self.field, self.b.clone(), self.c.clone()),
        ]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "{}", Error::FieldMismatch);
        if self.field.is_rational() {
            return Self::rational(&self.a * &other.a);
        }
        let mut coords = Vec::with_capacity(4);
        for u in self.basis() {
            for v in other.basis() {
                coords.push((&u * &v).integral_coords().expect("integral"));
            }
        }
        Self::hnf_of(self.field, coords).expect("product of nonzero ideals")
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::unit(self.field), |acc, _| acc.mul(self))
    }

    pub fn conj(&self) -> Self {
        if self.field.is_rational() {
            return self.clone();
        }
        let [g1, g2] = self.basis();
        Self::from_generators(self.field, &[g1, g2.conj()]).expect("nonzero")
    }

    pub fn contains(&self, x: &Element) -> bool {
        let Some((x, y)) = x.integral_coords() else {
            return false;
        };
        if self.field.is_rational() {
            return (x % &self.a).is_zero();
        }
        if !(&y % &self.c).is_zero() {
            return false;
        }
        let k = &y / &self.c;
        ((x - k * &self.b) % &self.a).is_zero()
    }

    /// `(n)` for rational integers `n`, detected from the HNF.
    pub fn as_rational_principal(&self) -> Option<BigInt> {
        if self.field.is_rational() {
            return Some(self.a.clone());
        }
        (self.a == self.c && self.b.is_zero()).then(|| self.a.clone())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_rational() {
            return write!(f, "({})", self.a);
        }
        let [g1, g2] = self.basis();
        write!(f, "[{g1}, {g2}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::{make_field, primes_above};

    #[test]
    fn hnf_and_products() {
        let k = make_field(-5).unwrap();
        // (2, 1 + w) squared is (2)
        let p2 = &primes_above(k, 2).unwrap()[0];
        let i = p2.ideal();
        assert_eq!(i.norm(), BigInt::from(2));
        let sq = i.mul(&i);
        assert_eq!(sq.as_rational_principal(), Some(BigInt::from(2)));
        let three = Ideal::principal(&Element::from_int(k, 3)).unwrap();
        assert_eq!(three.norm(), BigInt::from(9));
        assert!(three.contains(&Element::from_ints(k, 3, 6)));
        assert!(!three.contains(&Element::from_ints(k, 3, 1)));
    }

    #[test]
    fn conjugate_of_split_prime() {
        let k = make_field(2).unwrap();
        let ps = primes_above(k, 7).unwrap();
        assert_eq!(ps[0].ideal().conj(), ps[1].ideal());
        assert_eq!(ps[0].ideal().mul(&ps[1].ideal()).as_rational_principal(), Some(BigInt::from(7)));
    }
}
