use num_rational::BigRational;

use crate::algebra::arith::is_prime;
use crate::error::{Error, Result};
use crate::quadfield::{Element, Field};

/// Coefficients and exponent of `A a^p + B b^p = C c^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreyParams {
    pub big_a: Element,
    pub big_b: Element,
    pub big_c: Element,
    pub a: Element,
    pub b: Element,
    pub c: Element,
    pub p: u64,
}

impl FreyParams {
    /// Validates integrality, the prime `p >= 5` and the relation itself.
    pub fn new(
        big_a: Element,
        big_b: Element,
        big_c: Element,
        a: Element,
        b: Element,
        c: Element,
        p: u64,
    ) -> Result<Self> {
        let field = big_a.field();
        let all = [&big_a, &big_b, &big_c, &a, &b, &c];
        if all.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p < 5 {
            return Err(Error::PreconditionViolated(format!("exponent p = {p} must be at least 5")));
        }
        if all.iter().any(|e| !e.is_integral()) {
            return Err(Error::PreconditionViolated("coefficients and unknowns must be integral".into()));
        }
        if big_a.is_zero() || big_b.is_zero() || big_c.is_zero() {
            return Err(Error::PreconditionViolated("A, B, C must be nonzero".into()));
        }
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(Error::PreconditionViolated("(a, b, c) = (0, 0, 0)".into()));
        }
        let params = FreyParams { big_a, big_b, big_c, a, b, c, p };
        if params.lhs() != params.rhs() {
            return Err(Error::RelationViolated);
        }
        Ok(params)
    }

    pub fn from_ints(abc: [i64; 3], xyz: [i64; 3], p: u64) -> Result<Self> {
        let q = Field::rational();
        let e = |n: i64| Element::from_int(q, n);
        Self::new(e(abc[0]), e(abc[1]), e(abc[2]), e(xyz[0]), e(xyz[1]), e(xyz[2]), p)
    }

    pub fn field(&self) -> Field {
        self.big_a.field()
    }

    /// `A a^p`.
    pub fn a_term(&self) -> Element {
        &self.big_a * &self.a.pow(self.p)
    }

    /// `B b^p`.
    pub fn b_term(&self) -> Element {
        &self.big_b * &self.b.pow(self.p)
    }

    fn lhs(&self) -> Element {
        self.a_term() + self.b_term()
    }

    fn rhs(&self) -> Element {
        &self.big_c * &self.c.pow(3)
    }
}

/// Invariants of `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassInvariants {
    pub a1: Element,
    pub a2: Element,
    pub a3: Element,
    pub a4: Element,
    pub a6: Element,
    pub b2: Element,
    pub b4: Element,
    pub b6: Element,
    pub b8: Element,
    pub c4: Element,
    pub c6: Element,
    pub delta: Element,
    pub j: Element,
}

fn k(field: Field, n: i64) -> Element {
    Element::from_int(field, n)
}

impl WeierstrassInvariants {
    pub fn from_coefficients(a1: Element, a2: Element, a3: Element, a4: Element, a6: Element) -> Result<Self> {
        let f = a1.field();
        let b2 = &a1 * &a1 + &k(f, 4) * &a2;
        let b4 = &a1 * &a3 + &k(f, 2) * &a4;
        let b6 = &a3 * &a3 + &k(f, 4) * &a6;
        let b8 = &(&a1 * &a1) * &a6 + &(&k(f, 4) * &a2) * &a6 - &(&a1 * &a3) * &a4 + &a2 * &(&a3 * &a3)
            - &a4 * &a4;
        let c4 = &b2 * &b2 - &k(f, 24) * &b4;
        let c6 = -b2.pow(3) + &(&k(f, 36) * &b2) * &b4 - &k(f, 216) * &b6;
        let delta = -(&(&b2 * &b2) * &b8) - &k(f, 8) * &b4.pow(3) - &k(f, 27) * &(&b6 * &b6)
            + &(&(&k(f, 9) * &b2) * &b4) * &b6;
        if delta.is_zero() {
            return Err(Error::SingularModel);
        }
        let j = c4.pow(3).checked_div(&delta)?;
        Ok(WeierstrassInvariants { a1, a2, a3, a4, a6, b2, b4, b6, b8, c4, c6, delta, j })
    }
}

/// Builds the Frey curve and checks the closed forms for `c4`, `Delta`, `j`.
pub fn frey_model(params: &FreyParams) -> Result<WeierstrassInvariants> {
    if params.a.is_zero() || params.b.is_zero() {
        return Err(Error::SingularModel);
    }
    if params.lhs() != params.rhs() {
        return Err(Error::RelationViolated);
    }
    let f = params.field();
    let (ca, cb, cc) = (&params.big_a, &params.big_b, &params.big_c);
    let zero = Element::zero(f);
    let a1 = &k(f, 3) * &(cc * &params.c);
    let a3 = &(cc * cc) * &params.b_term();
    let inv = WeierstrassInvariants::from_coefficients(a1, zero.clone(), a3, zero.clone(), zero)?;

    let nine_a_b = &k(f, 9) * &params.a_term() + params.b_term();
    let c4 = &(&k(f, 9) * &cc.pow(3)) * &(&params.c * &nine_a_b);
    if c4 != inv.c4 {
        return Err(Error::ClosedFormMismatch("c4"));
    }
    let ab3p = (&params.a * &params.b.pow(3)).pow(params.p);
    let delta = &(&(&k(f, 27) * ca) * &(&cb.pow(3) * &cc.pow(8))) * &ab3p;
    if delta != inv.delta {
        return Err(Error::ClosedFormMismatch("Delta"));
    }
    let num = &(&k(f, 27) * cc) * &(&params.c.pow(3) * &nine_a_b.pow(3));
    let j = num.checked_div(&(&(ca * &cb.pow(3)) * &ab3p))?;
    if j != inv.j {
        return Err(Error::ClosedFormMismatch("j"));
    }
    let lhs = inv.c4.pow(3) - inv.c6.pow(2);
    if lhs != &k(f, 1728) * &inv.delta {
        return Err(Error::ConsistencyViolated("c4^3 - c6^2 != 1728 Delta".into()));
    }
    Ok(inv)
}

/// `mu = B b^p / (A a^p)`.
pub fn mu_of(params: &FreyParams) -> Result<Element> {
    if params.a.is_zero() {
        return Err(Error::DivisionByZero("mu needs a != 0".into()));
    }
    params.b_term().checked_div(&params.a_term())
}

/// `j = 27 (1 + mu)(9 + mu)^3 / mu^3`.
pub fn j_from_mu(mu: &Element) -> Result<Element> {
    if mu.is_zero() {
        return Err(Error::DivisionByZero("j(mu) at mu = 0".into()));
    }
    let f = mu.field();
    let one = BigRational::from_integer(1.into());
    let num = &(&k(f, 27) * &(mu + &Element::from_rational(f, one))) * &(mu + &k(f, 9)).pow(3);
    num.checked_div(&mu.pow(3))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Element {
        Element::from_int(Field::rational(), n)
    }

    #[test]
    fn first_example() {
        let p = FreyParams::from_ints([2, 1, 1], [1, -1, 1], 5).unwrap();
        let w = frey_model(&p).unwrap();
        assert_eq!((w.c4.clone(), w.c6.clone(), w.delta.clone()), (q(153), q(-1917), q(-54)));
        assert_eq!(w.j, Element::from_rational(Field::rational(), BigRational::new((-132651).into(), 2.into())));
        let mu = mu_of(&p).unwrap();
        assert_eq!(mu, Element::from_rational(Field::rational(), BigRational::new((-1).into(), 2.into())));
        assert_eq!(j_from_mu(&mu).unwrap(), w.j);
    }

    #[test]
    fn second_example() {
        let p = FreyParams::from_ints([1, 1, 2], [1, 1, 1], 7).unwrap();
        let w = frey_model(&p).unwrap();
        assert_eq!((w.c4, w.delta, w.j), (q(720), q(6912), q(54000)));
    }

    #[test]
    fn errors() {
        assert_eq!(FreyParams::from_ints([1, 1, 1], [1, 1, 1], 5), Err(Error::RelationViolated));
        let t = FreyParams::from_ints([1, 1, 1], [1, -1, 0], 5).unwrap();
        assert!(frey_model(&t).is_ok());
        let s = FreyParams::from_ints([1, 1, 1], [1, 0, 1], 5).unwrap();
        assert_eq!(frey_model(&s), Err(Error::SingularModel));
        assert!(matches!(j_from_mu(&q(0)), Err(Error::DivisionByZero(_))));
        assert_eq!(FreyParams::from_ints([1, 1, 2], [1, 1, 1], 9), Err(Error::NotPrime(9)));
    }
}
