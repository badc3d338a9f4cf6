use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{Element, Field, Ideal};
use crate::algebra::arith::{is_prime, kronecker, valuation_int};
use crate::algebra::{factor_mod_p, IntPolynomial};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    Inert,
    /// `P = (p, w - r)`, with `v_P(w - r) = 1`.
    Ramified { r: u64 },
    /// `P = (p, w - r)`; `rbar` is the root belonging to the conjugate prime.
    Split { r: u64, rbar: u64 },
}

/// A nonzero prime of the ring of integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeIdeal {
    field: Field,
    p: u64,
    kind: Kind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Splitting {
    Split(PrimeIdeal, PrimeIdeal),
    Inert(PrimeIdeal),
    Ramified(PrimeIdeal),
}

impl Splitting {
    pub fn primes(&self) -> Vec<PrimeIdeal> {
        match self {
            Splitting::Split(a, b) => vec![a.clone(), b.clone()],
            Splitting::Inert(a) | Splitting::Ramified(a) => vec![a.clone()],
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Splitting::Split(..) => "split",
            Splitting::Inert(_) => "inert",
            Splitting::Ramified(_) => "ramified",
        }
    }
}

/// Decomposition of `p` in the field. Over `Q` every prime is reported inert
/// with residue degree 1.
pub fn splitting_type(field: Field, p: u64) -> Result<Splitting> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let inert = || PrimeIdeal { field, p, kind: Kind::Inert };
    if field.is_rational() {
        return Ok(Splitting::Inert(inert()));
    }
    let (t, n) = field.omega_relation();
    let minpoly = IntPolynomial::from_i64(&[-n, -t, 1]);
    let factors = factor_mod_p(&minpoly, p)?;
    let root = |f: &crate::algebra::FpPoly| (p - f.coeffs()[0]) % p;
    Ok(match factors.as_slice() {
        [(f, 2)] => Splitting::Ramified(PrimeIdeal { field, p, kind: Kind::Ramified { r: root(f) } }),
        [(f, 1), (g, 1)] => {
            let (r1, r2) = (root(f), root(g));
            let (r1, r2) = (r1.min(r2), r1.max(r2));
            Splitting::Split(
                PrimeIdeal { field, p, kind: Kind::Split { r: r1, rbar: r2 } },
                PrimeIdeal { field, p, kind: Kind::Split { r: r2, rbar: r1 } },
            )
        }
        _ => Splitting::Inert(inert()),
    })
}

pub fn primes_above(field: Field, p: u64) -> Result<Vec<PrimeIdeal>> {
    Ok(splitting_type(field, p)?.primes())
}

impl PrimeIdeal {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        match self.kind {
            Kind::Ramified { .. } => 2,
            _ => 1,
        }
    }

    pub fn f(&self) -> u32 {
        match self.kind {
            Kind::Inert if !self.field.is_rational() => 2,
            _ => 1,
        }
    }

    pub fn norm(&self) -> BigInt {
        BigInt::from(self.p).pow(self.f())
    }

    pub fn is_inert(&self) -> bool {
        self.kind == Kind::Inert
    }

    pub fn is_ramified(&self) -> bool {
        matches!(self.kind, Kind::Ramified { .. })
    }

    pub fn is_split(&self) -> bool {
        matches!(self.kind, Kind::Split { .. })
    }

    /// Second generator `w - r`, absent for inert primes.
    pub fn second_generator(&self) -> Option<Element> {
        match self.kind {
            Kind::Inert => None,
            Kind::Ramified { r } | Kind::Split { r, .. } => {
                Some(Element::from_ints(self.field, -(r as i64), 1))
            }
        }
    }

    pub fn conjugate(&self) -> PrimeIdeal {
        match self.kind {
            Kind::Split { r, rbar } => PrimeIdeal {
                field: self.field,
                p: self.p,
                kind: Kind::Split { r: rbar, rbar: r },
            },
            _ => self.clone(),
        }
    }

    pub fn ideal(&self) -> Ideal {
        let p = BigInt::from(self.p);
        match self.kind {
            _ if self.field.is_rational() => Ideal::rational(p),
            Kind::Inert => Ideal::from_hnf(self.field, p.clone(), BigInt::zero(), p),
            Kind::Ramified { r } | Kind::Split { r, .. } => {
                let b = (-BigInt::from(r)).mod_floor(&p);
                Ideal::from_hnf(self.field, p, b, BigInt::from(1))
            }
        }
    }

    fn contains_integral(&self, x: &BigInt, y: &BigInt) -> bool {
        let p = BigInt::from(self.p);
        match self.kind {
            Kind::Inert => (x % &p).is_zero() && (y % &p).is_zero(),
            Kind::Ramified { r } | Kind::Split { r, .. } => {
                ((x + y * BigInt::from(r)) % &p).is_zero()
            }
        }
    }

    /// Whether the element lies in `P` (it must be integral to do so).
    pub fn contains(&self, x: &Element) -> bool {
        match x.integral_coords() {
            Some((a, b)) => self.contains_integral(&a, &b),
            None => false,
        }
    }

    /// `v_P(x)`; `None` stands for `+infinity` at `x = 0`.
    pub fn valuation(&self, x: &Element) -> Option<i64> {
        assert_eq!(x.field(), self.field, "{}", Error::FieldMismatch);
        if x.is_zero() {
            return None;
        }
        let m = x.denominator();
        let shift = valuation_int(&m, self.p).unwrap_or(0) as i64 * self.e() as i64;
        let scaled = x.scale(&num_rational::BigRational::from_integer(m));
        let (a, b) = scaled.integral_coords().expect("scaled to integral");
        Some(self.valuation_integral(a, b) - shift)
    }

    fn valuation_integral(&self, mut a: BigInt, mut b: BigInt) -> i64 {
        if self.field.is_rational() {
            return valuation_int(&a, self.p).unwrap() as i64;
        }
        let p = BigInt::from(self.p);
        let va = valuation_int(&a, self.p).unwrap_or(u32::MAX);
        let vb = valuation_int(&b, self.p).unwrap_or(u32::MAX);
        let g = va.min(vb);
        let mut v = g as i64 * self.e() as i64;
        let pg = p.pow(g);
        a /= &pg;
        b /= &pg;
        let beta = match self.kind {
            Kind::Inert => return v,
            Kind::Ramified { r } => r,
            Kind::Split { rbar, .. } => rbar,
        };
        let (t, n) = self.field.omega_relation();
        let beta = BigInt::from(beta);
        while self.contains_integral(&a, &b) {
            // (a + b w)(w - beta) / p
            let na = &b * BigInt::from(n) - &a * &beta;
            let nb = &a + &b * BigInt::from(t) - &b * &beta;
            debug_assert!((&na % &p).is_zero() && (&nb % &p).is_zero());
            a = na / &p;
            b = nb / &p;
            v += 1;
        }
        v
    }

    /// Kronecker-symbol prediction for this prime's splitting type.
    pub fn kronecker_class(&self) -> i32 {
        kronecker(self.field.discriminant(), self.p)
    }

    pub fn residue_root(&self) -> Option<u64> {
        match self.kind {
            Kind::Inert => None,
            Kind::Ramified { r } | Kind::Split { r, .. } => Some(r),
        }
    }

    pub fn p_i64(&self) -> i64 {
        self.p.to_i64().expect("prime fits in i64")
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.second_generator() {
            None => write!(f, "({})", self.p),
            Some(g) => write!(f, "({}, {})", self.p, g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::make_field;

    #[test]
    fn splitting_examples() {
        let k2 = make_field(2).unwrap();
        assert!(matches!(splitting_type(k2, 3).unwrap(), Splitting::Inert(_)));
        assert!(matches!(splitting_type(make_field(3).unwrap(), 3).unwrap(), Splitting::Ramified(_)));
        // 2 = 3^2 mod 7
        let Splitting::Split(p1, p2) = splitting_type(k2, 7).unwrap() else {
            panic!("7 splits in Q(sqrt 2)")
        };
        assert_eq!((p1.residue_root(), p2.residue_root()), (Some(3), Some(4)));
        assert_eq!(p1.to_string(), "(7, -3 + w)");
        assert_eq!(splitting_type(k2, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn valuations() {
        let k2 = make_field(2).unwrap();
        let p3 = &primes_above(k2, 3).unwrap()[0];
        assert_eq!(p3.valuation(&Element::from_int(k2, 9)), Some(2));
        assert_eq!(p3.valuation(&Element::zero(k2)), None);
        let k3 = make_field(3).unwrap();
        let q3 = &primes_above(k3, 3).unwrap()[0];
        assert_eq!(q3.valuation(&Element::from_int(k3, 3)), Some(2));
        assert_eq!(q3.valuation(&Element::omega(k3)), Some(1));
        let p2 = &primes_above(k2, 2).unwrap()[0];
        assert_eq!(p2.valuation(&Element::from_int(k2, 2)), Some(2));
        let half = Element::new(k2, num_rational::BigRational::new(1.into(), 2.into()), num_rational::BigRational::from_integer(0.into()));
        assert_eq!(p2.valuation(&half), Some(-2));
        // 7 = (3 + w)(3 - w) in Q(sqrt 2)
        let [a, b] = primes_above(k2, 7).unwrap().try_into().unwrap();
        let x = Element::from_ints(k2, 3, 1);
        let va = a.valuation(&x).unwrap();
        let vb = b.valuation(&x).unwrap();
        assert_eq!(va + vb, 1);
    }
}
