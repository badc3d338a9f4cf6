//! Binary quadratic forms `a x^2 + b x y + c y^2`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Field, Ideal};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Form {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl Form {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        Form { a: a.into(), b: b.into(), c: c.into() }
    }

    pub fn disc(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c).is_one()
    }

    /// The principal form of discriminant `disc`.
    pub fn principal(disc: &BigInt) -> Self {
        let b = if disc.is_odd() { BigInt::one() } else { BigInt::zero() };
        let c = (&b * &b - disc) / 4;
        Form { a: BigInt::one(), b, c }
    }

    /// `(a, -b, c)`, the inverse class.
    pub fn inverse(&self) -> Self {
        Form { a: self.a.clone(), b: -&self.b, c: self.c.clone() }
    }

    /// `(-a, b, -c)`; in the same wide class as `self`.
    pub fn negate(&self) -> Self {
        Form { a: -&self.a, b: self.b.clone(), c: -&self.c }
    }

    /// Form attached to the primitive part `[a, B + w]` of an ideal.
    pub fn from_ideal(ideal: &Ideal) -> Self {
        let field = ideal.field();
        let (a, b, c) = ideal.hnf();
        let a1 = a / c;
        let b1 = b / c;
        let disc = BigInt::from(field.discriminant());
        // [a1, B + w] = [a1, (-b + sqrt D)/2]
        let fb = if field.half_basis() {
            -(BigInt::from(2) * &b1 + BigInt::one())
        } else {
            -(BigInt::from(2) * &b1)
        };
        let fc = (&fb * &fb - &disc) / (BigInt::from(4) * &a1);
        Form { a: a1, b: fb, c: fc }
    }

    /// The ideal `[|a|, (-b + sqrt D)/2]`.
    pub fn to_ideal(&self, field: Field) -> Ideal {
        let a = self.a.abs();
        let bb: BigInt = if field.half_basis() {
            (-&self.b - BigInt::one()) / 2
        } else {
            -&self.b / 2
        };
        let bb = bb.mod_floor(&a);
        Ideal::from_hnf(field, a, bb, BigInt::one())
    }

    /// Gauss reduction of a positive definite form.
    pub fn reduce_definite(&self) -> Self {
        let mut f = self.clone();
        loop {
            // normalise b into (-a, a]
            let two_a = BigInt::from(2) * &f.a;
            let mut r = (&f.b).mod_floor(&two_a);
            if r > f.a {
                r -= &two_a;
            }
            if r != f.b {
                let k = (&r - &f.b) / &two_a;
                // x -> x + k y
                f.c = &f.a * &k * &k + &f.b * &k + &f.c;
                f.b = r;
            }
            if f.a > f.c {
                f = Form { a: f.c.clone(), b: -&f.b, c: f.a.clone() };
                continue;
            }
            if f.a == f.c && f.b.is_negative() {
                f.b = -f.b;
            }
            return f;
        }
    }

    pub fn is_reduced_definite(&self) -> bool {
        let ab = self.b.abs();
        ab <= self.a
            && self.a <= self.c
            && !(self.b.is_negative() && (ab == self.a || self.a == self.c))
    }

    /// `|sqrt D - 2|a|| < b < sqrt D`, tested with integers (`D` not a square).
    pub fn is_reduced_indefinite(&self) -> bool {
        let s = self.disc().sqrt();
        let two_a = BigInt::from(2) * self.a.abs();
        self.b.is_positive() && self.b <= s && &two_a - &self.b <= s && &self.b + &two_a > s
    }

    /// One reduction step for indefinite forms.
    pub fn rho(&self) -> Self {
        let d = self.disc();
        let s = d.sqrt();
        let c_abs = self.c.abs();
        let two_c = BigInt::from(2) * &c_abs;
        let nb = -&self.b;
        let r = if c_abs > s {
            let mut r = nb.mod_floor(&two_c);
            if r > c_abs {
                r -= &two_c;
            }
            r
        } else {
            // largest r = -b mod 2|c| with r <= s
            &s - (&s - &nb).mod_floor(&two_c)
        };
        let nc = (&r * &r - &d) / (BigInt::from(4) * &self.c);
        Form { a: self.c.clone(), b: r, c: nc }
    }

    pub fn reduce_indefinite(&self) -> Self {
        let mut f = self.clone();
        while !f.is_reduced_indefinite() {
            f = f.rho();
        }
        f
    }

    /// The `rho`-cycle of a reduced indefinite form.
    pub fn cycle(&self) -> Vec<Form> {
        let mut out = vec![self.clone()];
        let mut g = self.rho();
        while &g != self {
            out.push(g.clone());
            g = g.rho();
        }
        out
    }

    /// Composition of positive definite forms, followed by reduction.
    pub fn compose_definite(&self, other: &Self) -> Self {
        let (f1, f2) = if self.a > other.a { (other, self) } else { (self, other) };
        let (a1, b1) = (&f1.a, &f1.b);
        let (a2, b2, c2) = (&f2.a, &f2.b, &f2.c);
        let s: BigInt = (b1 + b2) / 2;
        let n = b2 - &s;
        let (y1, d) = if (a2 % a1).is_zero() {
            (BigInt::zero(), a1.clone())
        } else {
            let eg = a2.extended_gcd(a1);
            (eg.x, eg.gcd)
        };
        let (x2, y2, d1): (BigInt, BigInt, BigInt) = if (&s % &d).is_zero() {
            (BigInt::zero(), -BigInt::one(), d.clone())
        } else {
            let eg = s.extended_gcd(&d);
            (eg.x, -eg.y, eg.gcd)
        };
        let v1 = a1 / &d1;
        let v2 = a2 / &d1;
        let r = (&y1 * &y2 * &n - &x2 * c2).mod_floor(&v1);
        let b3 = b2 + BigInt::from(2) * &v2 * &r;
        let a3 = &v1 * &v2;
        let disc = self.disc();
        let c3 = (&b3 * &b3 - disc) / (BigInt::from(4) * &a3);
        Form { a: a3, b: b3, c: c3 }.reduce_definite()
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}
