use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::quadfield::{primes_above, Element, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaVerdict {
    IntegralAndUnramified,
    Not,
}

/// Coefficients and discriminants of
/// `m(x) = x^3 + gamma s/3 x^2 - gamma^2 x - s^2/27`, `s = gamma^3 - beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    /// `[1, a, b, c]`, leading coefficient first.
    pub coefficients: [Element; 4],
    pub integral: bool,
    /// The five-term closed form carried over from the literature.
    pub delta_closed_form: Element,
    /// `a^2 b^2 - 4 b^3 - 4 a^3 c - 27 c^2 + 18 a b c`.
    pub delta_direct: Element,
    /// `delta_closed_form = -4 gamma^6 (mod 3)`.
    pub closed_form_congruence: bool,
    /// `delta_direct = -4 gamma^6 (mod 3)`; fails whenever `gamma` is a unit at 3.
    pub direct_congruence: bool,
    pub verdict: ThetaVerdict,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `x = y (mod 3 O_K)` for integral `x, y`.
fn congruent_mod3(x: &Element, y: &Element) -> bool {
    (x - y).scale(&rat(1, 3)).is_integral()
}

pub fn theta_check(field: Field, beta: &Element, gamma: &Element) -> Result<ThetaReport> {
    if beta.field() != field || gamma.field() != field {
        return Err(Error::FieldMismatch);
    }
    let g3 = gamma.pow(3);
    let s = &g3 - beta;
    if !s.scale(&rat(1, 27)).is_integral() || !gamma.is_integral() {
        return Err(Error::PreconditionViolated(format!(
            "gamma^3 - beta = {s} is not divisible by 27 in O_K"
        )));
    }
    for p in primes_above(field, 3)? {
        if p.valuation(gamma) != Some(0) {
            return Err(Error::PreconditionViolated(format!("gamma = {gamma} is not a unit at {p}")));
        }
    }
    let g2 = gamma.pow(2);
    let g6 = g3.pow(2);
    let a = (gamma * &s).scale(&rat(1, 3));
    let b = -&g2;
    let c = -s.pow(2).scale(&rat(1, 27));
    let one = Element::one(field);
    let integral = [&a, &b, &c].iter().all(|e| e.is_integral());

    let s2 = s.pow(2);
    let s3 = &s2 * &s;
    let s4 = &s2 * &s2;
    let s5 = &s4 * &s;
    let delta_closed_form = (&g3 * &s3).scale(&rat(-2, 243))
        + (&g3 * &s5).scale(&rat(-4, 19683))
        + (&g6 * &s2).scale(&rat(1, 9))
        + g6.scale(&rat(-4, 1))
        + s4.scale(&rat(-1, 27));

    let ab = &a * &b;
    let delta_direct = (&ab * &ab) - b.pow(3).scale(&rat(4, 1)) - (a.pow(3) * &c).scale(&rat(4, 1))
        - c.pow(2).scale(&rat(27, 1))
        + (&ab * &c).scale(&rat(18, 1));

    let target = g6.scale(&rat(-4, 1));
    let closed_form_congruence = delta_closed_form.is_integral() && congruent_mod3(&delta_closed_form, &target);
    let direct_congruence = delta_direct.is_integral() && congruent_mod3(&delta_direct, &target);
    let verdict = if integral && closed_form_congruence {
        ThetaVerdict::IntegralAndUnramified
    } else {
        ThetaVerdict::Not
    };
    Ok(ThetaReport {
        coefficients: [one, a, b, c],
        integral,
        delta_closed_form,
        delta_direct,
        closed_form_congruence,
        direct_congruence,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntPolynomial;
    use crate::quadfield::make_field;

    fn z(q: Field, n: i64) -> Element {
        Element::from_int(q, n)
    }

    #[test]
    fn degenerate_case() {
        let q = Field::rational();
        let r = theta_check(q, &z(q, 1), &z(q, 1)).unwrap();
        assert_eq!(r.coefficients, [z(q, 1), z(q, 0), z(q, -1), z(q, 0)]);
        assert_eq!(r.delta_closed_form, z(q, -4));
        // x^3 - x has discriminant 4
        assert_eq!(r.delta_direct, z(q, 4));
        assert_eq!(r.verdict, ThetaVerdict::IntegralAndUnramified);
        assert!(!r.direct_congruence);
    }

    #[test]
    fn precondition() {
        let q = Field::rational();
        assert!(matches!(theta_check(q, &z(q, 37), &z(q, 1)), Err(Error::PreconditionViolated(_))));
        assert!(matches!(theta_check(q, &z(q, 0), &z(q, 3)), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn gamma_two() {
        let q = Field::rational();
        let r = theta_check(q, &z(q, -19), &z(q, 2)).unwrap();
        assert_eq!(r.coefficients, [z(q, 1), z(q, 18), z(q, -4), z(q, -27)]);
        assert!(r.integral && r.closed_form_congruence);
        assert_eq!(r.verdict, ThetaVerdict::IntegralAndUnramified);
        // direct discriminant of x^3 + 18x^2 - 4x - 27 via the resultant-free formula
        let f = IntPolynomial::from_i64(&[-27, -4, 18, 1]);
        let (a, b, c) = (18i64, -4i64, -27i64);
        let want = a * a * b * b - 4 * b.pow(3) - 4 * a.pow(3) * c - 27 * c * c + 18 * a * b * c;
        assert_eq!(r.delta_direct, z(q, want));
        assert_eq!(f.degree(), Some(3));
    }

    #[test]
    fn quadratic_field() {
        let k = make_field(2).unwrap();
        let g = Element::from_ints(k, 1, 1);
        let beta = &g.pow(3) - &z(k, 27);
        let r = theta_check(k, &beta, &g).unwrap();
        assert!(r.integral);
        assert_eq!(r.verdict, ThetaVerdict::IntegralAndUnramified);
    }
}
