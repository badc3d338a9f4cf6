use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Field;
use crate::algebra::arith::{common_denominator, exact_cbrt, exact_sqrt, rational_cube_root};
use crate::error::{Error, Result};

/// `x + y*w` over the integral basis `{1, w}` of the field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    field: Field,
    x: BigRational,
    y: BigRational,
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl Element {
    pub fn new(field: Field, x: BigRational, y: BigRational) -> Self {
        assert!(
            !field.is_rational() || y.is_zero(),
            "rational field elements have no w-coordinate"
        );
        Element { field, x, y }
    }

    pub fn from_int(field: Field, n: impl Into<BigInt>) -> Self {
        Self::new(field, rat(n), BigRational::zero())
    }

    pub fn from_ints(field: Field, x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self::new(field, rat(x), rat(y))
    }

    pub fn from_rational(field: Field, q: BigRational) -> Self {
        Self::new(field, q, BigRational::zero())
    }

    pub fn zero(field: Field) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: Field) -> Self {
        Self::from_int(field, 1)
    }

    pub fn omega(field: Field) -> Self {
        Self::from_ints(field, 0, 1)
    }

    /// The element `a + b*sqrt(d)`.
    pub fn from_sqrt_coords(field: Field, a: BigRational, b: BigRational) -> Self {
        if field.half_basis() {
            // sqrt d = 2w - 1
            let y = &b * rat(2);
            Self::new(field, a - b, y)
        } else {
            Self::new(field, a, b)
        }
    }

    /// `(a, b)` with `self = a + b*sqrt(d)`.
    pub fn sqrt_coords(&self) -> (BigRational, BigRational) {
        if self.field.half_basis() {
            let half = BigRational::new(1.into(), 2.into());
            (&self.x + &self.y * &half, &self.y * half)
        } else {
            (self.x.clone(), self.y.clone())
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    pub fn y(&self) -> &BigRational {
        &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.y.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    pub fn integral_coords(&self) -> Option<(BigInt, BigInt)> {
        self.is_integral()
            .then(|| (self.x.to_integer(), self.y.to_integer()))
    }

    /// Least positive integer `m` with `m * self` integral.
    pub fn denominator(&self) -> BigInt {
        common_denominator([&self.x, &self.y])
    }

    pub fn conj(&self) -> Self {
        if self.field.is_rational() {
            return self.clone();
        }
        let (t, _) = self.field.omega_relation();
        // conj(w) = t - w
        Self::new(self.field, &self.x + &self.y * rat(t), -&self.y)
    }

    pub fn norm(&self) -> BigRational {
        if self.field.is_rational() {
            return self.x.clone();
        }
        let (t, n) = self.field.omega_relation();
        // (x + yw)(x + y(t - w)) = x^2 + t xy - n y^2
        &self.x * &self.x + &self.x * &self.y * rat(t) - &self.y * &self.y * rat(n)
    }

    pub fn trace(&self) -> BigRational {
        if self.field.is_rational() {
            return self.x.clone();
        }
        let (t, _) = self.field.omega_relation();
        &self.x * rat(2) + &self.y * rat(t)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::new(self.field, &self.x * q, &self.y * q)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("inverse of 0".into()));
        }
        if self.field.is_rational() {
            return Ok(Self::from_rational(self.field, self.x.recip()));
        }
        let n = self.norm();
        Ok(self.conj().scale(&n.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Sign under the real embedding with `sqrt d > 0`. Meaningless for
    /// imaginary fields, where it panics.
    pub fn real_sign(&self) -> Ordering {
        assert!(self.field.is_totally_real(), "no real embedding");
        let (a, b) = self.sqrt_coords();
        let sa = a.cmp(&BigRational::zero());
        let sb = b.cmp(&BigRational::zero());
        if sb == Ordering::Equal || sa == sb {
            return if sa == Ordering::Equal { sb } else { sa };
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // opposite signs: compare a^2 with d b^2
        let lhs = &a * &a;
        let rhs = &b * &b * rat(self.field.d());
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Compares `|self|` with `|other|` under the real embedding.
    pub fn abs_cmp(&self, other: &Self) -> Ordering {
        let a = self.abs_real();
        let b = other.abs_real();
        (&a - &b).real_sign()
    }

    pub fn abs_real(&self) -> Self {
        if self.real_sign() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.field, other.field, "{}", Error::FieldMismatch);
    }
}

impl Element {
    /// All `r` in the field with `r^3 = self`, sorted.
    pub fn cube_roots(&self) -> Vec<Element> {
        let field = self.field;
        if self.is_zero() {
            return vec![self.clone()];
        }
        if field.is_rational() {
            return rational_cube_root(&self.x)
                .map(|r| vec![Element::from_rational(field, r)])
                .unwrap_or_default();
        }
        // scale to an integral element z = m^3 * self
        let m = self.denominator();
        let m3 = BigRational::from_integer(&m * &m * &m);
        let z = self.scale(&m3);
        let nz = z.norm().to_integer();
        let tz = z.trace().to_integer();
        let Some(n) = exact_cbrt(&nz) else {
            return Vec::new();
        };
        // a cube root r of z has norm n and trace t with t^3 - 3nt = Tr(z)
        let d = BigInt::from(field.d());
        let mut out = Vec::new();
        for t in integer_roots_depressed_cubic(&n, &tz) {
            let disc = &t * &t - BigInt::from(4) * &n;
            let sq = if let Some(r) = exact_sqrt(&disc) {
                Some((r, BigInt::zero()))
            } else if (&disc % &d).is_zero() {
                exact_sqrt(&(&disc / &d)).map(|s| (BigInt::zero(), s))
            } else {
                None
            };
            let Some((r, s)) = sq else { continue };
            for sign in [1, -1] {
                let a = BigRational::new(&t + &r * sign, BigInt::from(2));
                let b = BigRational::new(&s * sign, BigInt::from(2));
                let cand = Element::from_sqrt_coords(field, a, b);
                if cand.pow(3) == z {
                    let root = cand.scale(&BigRational::new(BigInt::one(), m.clone()));
                    if !out.contains(&root) {
                        out.push(root);
                    }
                }
            }
        }
        out.sort();
        out
    }
}

/// Integer roots of `t^3 - 3 n t - c`.
fn integer_roots_depressed_cubic(n: &BigInt, c: &BigInt) -> Vec<BigInt> {
    let three_n = BigInt::from(3) * n;
    let g = |t: &BigInt| t * t * t - &three_n * t - c;
    let bound = BigInt::one() + three_n.abs().max(c.abs());
    let mut intervals = Vec::new();
    if n.is_positive() {
        let k = n.sqrt();
        intervals.push((-&bound, -&k - 1, true));
        intervals.push((-&k, k.clone(), false));
        intervals.push((k + 1, bound.clone(), true));
    } else {
        intervals.push((-&bound, bound.clone(), true));
    }
    let mut roots = Vec::new();
    for (mut lo, mut hi, increasing) in intervals {
        // g monotone on [lo, hi]
        while lo <= hi {
            let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
            let v = g(&mid);
            if v.is_zero() {
                roots.push(mid);
                break;
            }
            if (v.is_negative()) == increasing {
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
    }
    roots
}

impl Add for &Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        self.check_same(o);
        Element::new(self.field, &self.x + &o.x, &self.y + &o.y)
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, o: &Element) -> Element {
        self.check_same(o);
        Element::new(self.field, &self.x - &o.x, &self.y - &o.y)
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, o: &Element) -> Element {
        self.check_same(o);
        if self.field.is_rational() {
            return Element::new(self.field, &self.x * &o.x, BigRational::zero());
        }
        let (t, n) = self.field.omega_relation();
        // (x1 + y1 w)(x2 + y2 w), w^2 = t w + n
        let yy = &self.y * &o.y;
        let x = &self.x * &o.x + &yy * rat(n);
        let y = &self.x * &o.y + &self.y * &o.x + yy * rat(t);
        Element::new(self.field, x, y)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::new(self.field, -&self.x, -&self.y)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Element {
            type Output = Element;
            fn $m(self, o: Element) -> Element {
                (&self).$m(&o)
            }
        }
        impl $tr<&Element> for Element {
            type Output = Element;
            fn $m(self, o: &Element) -> Element {
                (&self).$m(o)
            }
        }
        impl $tr<Element> for &Element {
            type Output = Element;
            fn $m(self, o: Element) -> Element {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            return write!(f, "{}", fmt_rat(&self.x));
        }
        let ycoef = if self.y.abs().is_one() {
            "w".to_string()
        } else {
            format!("{}*w", fmt_rat(&self.y.abs()))
        };
        if self.x.is_zero() {
            let sign = if self.y.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{ycoef}");
        }
        let op = if self.y.is_negative() { '-' } else { '+' };
        write!(f, "{} {op} {ycoef}", fmt_rat(&self.x))
    }
}

impl Element {
    /// Parses the display syntax: sums of rational terms and rational
    /// multiples of `w`, e.g. `3`, `-1/2`, `1 + 2*w`, `w - 1`, `3/2w`.
    pub fn parse(field: Field, s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad field element `{s}`"));
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut x = BigRational::zero();
        let mut y = BigRational::zero();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(r) => (true, r),
                None => (false, term.strip_prefix('+').unwrap_or(term)),
            };
            let (is_w, num) = match body.strip_suffix('w') {
                Some(r) => (true, r.strip_suffix('*').unwrap_or(r)),
                None => (false, body),
            };
            let mut q = if num.is_empty() {
                if !is_w {
                    return Err(bad());
                }
                BigRational::one()
            } else {
                parse_rat(num).ok_or_else(bad)?
            };
            if neg {
                q = -q;
            }
            if is_w {
                y += q;
            } else {
                x += q;
            }
        }
        if field.is_rational() && !y.is_zero() {
            return Err(Error::Parse(format!("`{s}` is not rational")));
        }
        Ok(Element::new(field, x, y))
    }
}

fn parse_rat(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::make_field;

    #[test]
    fn arithmetic_sqrt2() {
        let k = make_field(2).unwrap();
        let e = Element::from_ints(k, 1, 1);
        assert_eq!(e.norm(), rat(-1));
        assert_eq!(&e * &e.conj(), Element::from_int(k, -1));
        assert_eq!(e.pow(2), Element::from_ints(k, 3, 2));
        assert_eq!(&e * &e.inv().unwrap(), Element::one(k));
    }

    #[test]
    fn arithmetic_half_basis() {
        let k = make_field(5).unwrap();
        let w = Element::omega(k);
        // w^2 = w + 1
        assert_eq!(w.pow(2), Element::from_ints(k, 1, 1));
        assert_eq!(w.norm(), rat(-1));
        assert_eq!(w.trace(), rat(1));
        let s = Element::from_sqrt_coords(k, rat(0), rat(1));
        assert_eq!(s.pow(2), Element::from_int(k, 5));
    }

    #[test]
    fn signs_and_display() {
        let k = make_field(2).unwrap();
        let e = Element::from_ints(k, 1, -1); // 1 - sqrt 2 < 0
        assert_eq!(e.real_sign(), Ordering::Less);
        assert_eq!(Element::from_ints(k, -3, 2).real_sign(), Ordering::Less);
        assert_eq!(Element::from_ints(k, 3, -2).real_sign(), Ordering::Greater);
        assert_eq!(e.to_string(), "1 - w");
        assert_eq!(Element::parse(k, "1 - w").unwrap(), e);
        let q = Element::new(k, BigRational::new(1.into(), 2.into()), rat(-3));
        assert_eq!(q.to_string(), "1/2 - 3*w");
        assert_eq!(Element::parse(k, &q.to_string()).unwrap(), q);
        assert!(Element::parse(Field::rational(), "w").is_err());
    }

    #[test]
    fn cube_roots() {
        let k = make_field(2).unwrap();
        let e = Element::from_ints(k, 1, 1);
        assert_eq!(e.pow(3).cube_roots(), vec![e.clone()]);
        let q = e.pow(3).scale(&BigRational::new(8.into(), 27.into()));
        assert_eq!(q.cube_roots(), vec![e.scale(&BigRational::new(2.into(), 3.into()))]);
        assert!(Element::from_int(k, 2).cube_roots().is_empty());
        // three cube roots of 1 in Q(sqrt -3)
        let k3 = make_field(-3).unwrap();
        assert_eq!(Element::one(k3).cube_roots().len(), 3);
        let q = Field::rational();
        assert_eq!(Element::from_int(q, -8).cube_roots(), vec![Element::from_int(q, -2)]);
    }
}
