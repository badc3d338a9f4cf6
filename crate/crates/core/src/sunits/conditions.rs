use super::{SUnitTriple, UnitPlusOne};
use crate::quadfield::{Element, PrimeIdeal};

/// Outcome of one class under a hypothesis predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCheck {
    /// `(prime, valuation)` pairs that were inspected.
    pub valuations: Vec<(PrimeIdeal, i64)>,
    /// The prime that satisfied the inequality, if any.
    pub witness_prime: Option<PrimeIdeal>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub holds: bool,
    /// First failing solution, rendered as `(alpha, beta, gamma)`.
    pub failing: Option<(Element, Element, Element)>,
    pub classes: Vec<ClassCheck>,
}

impl ConditionReport {
    fn from_classes(classes: Vec<ClassCheck>, triples: Vec<(Element, Element, Element)>) -> Self {
        let failing = classes.iter().zip(triples).find(|(c, _)| !c.ok).map(|(_, t)| t);
        ConditionReport { holds: failing.is_none(), failing, classes }
    }
}

/// `v_P(3)`.
pub fn v3(p: &PrimeIdeal) -> i64 {
    if p.p() == 3 {
        p.e() as i64
    } else {
        0
    }
}

fn ratio_valuation(p: &PrimeIdeal, t: &SUnitTriple) -> i64 {
    p.valuation(&t.alpha).unwrap() - p.valuation(&t.beta).unwrap()
}

fn as_triple(t: &SUnitTriple) -> (Element, Element, Element) {
    (t.alpha.clone(), t.beta.clone(), t.gamma.clone())
}

/// Every class has some `P` in `s_k` with `|v_P(alpha/beta)| <= 3 v_P(3)`.
pub fn check_condition_t1(solutions: &[SUnitTriple], s_k: &[PrimeIdeal]) -> ConditionReport {
    let classes = solutions
        .iter()
        .map(|t| {
            let valuations: Vec<(PrimeIdeal, i64)> =
                s_k.iter().map(|p| (p.clone(), ratio_valuation(p, t))).collect();
            let witness_prime =
                valuations.iter().find(|(p, v)| v.abs() <= 3 * v3(p)).map(|(p, _)| p.clone());
            ClassCheck { ok: witness_prime.is_some(), valuations, witness_prime }
        })
        .collect();
    ConditionReport::from_classes(classes, solutions.iter().map(as_triple).collect())
}

/// Every solution of `alpha + 1 = gamma^3` with `v_P(alpha) >= 0` has
/// `v_P(alpha) <= 3 v_P(3)`.
pub fn check_condition_t2(solutions: &[UnitPlusOne], p: &PrimeIdeal) -> ConditionReport {
    let bound = 3 * v3(p);
    let classes = solutions
        .iter()
        .map(|s| {
            let v = p.valuation(&s.alpha).unwrap();
            let ok = v < 0 || v <= bound;
            ClassCheck {
                valuations: vec![(p.clone(), v)],
                witness_prime: ok.then(|| p.clone()),
                ok,
            }
        })
        .collect();
    let one = Element::one(p.field());
    let triples = solutions.iter().map(|s| (s.alpha.clone(), one.clone(), s.gamma.clone())).collect();
    ConditionReport::from_classes(classes, triples)
}

/// Every class has `v_P(alpha/beta) = 2`.
pub fn check_condition_k(solutions: &[SUnitTriple], p: &PrimeIdeal) -> ConditionReport {
    let classes = solutions
        .iter()
        .map(|t| {
            let v = ratio_valuation(p, t);
            ClassCheck {
                valuations: vec![(p.clone(), v)],
                witness_prime: (v == 2).then(|| p.clone()),
                ok: v == 2,
            }
        })
        .collect();
    ConditionReport::from_classes(classes, solutions.iter().map(as_triple).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::{primes_above, Field};
    use crate::sunits::{s_unit_basis, solve_cube_sum, solve_unit_plus_one, canonicalize};

    fn setup() -> (crate::sunits::SUnitBasis, PrimeIdeal) {
        let q = Field::rational();
        let s = primes_above(q, 3).unwrap();
        (s_unit_basis(q, &s).unwrap(), s[0].clone())
    }

    #[test]
    fn t1_over_q() {
        let (b, p) = setup();
        let sols = solve_cube_sum(&b, 6).unwrap().solutions;
        let r = check_condition_t1(&sols, &[p.clone()]);
        assert!(r.holds);
        for c in &r.classes {
            assert!([0, 2].contains(&c.valuations[0].1.abs()));
        }
        assert!(check_condition_t1(&[], &[p]).holds);
    }

    #[test]
    fn t1_witness() {
        let (b, p) = setup();
        let q = Field::rational();
        // 81 + (-1) is not a cube, but the predicate only reads valuations
        let t = canonicalize(&b, &[0, 4], &[1, 0], &Element::from_int(q, 0));
        let r = check_condition_t1(std::slice::from_ref(&t), &[p]);
        assert!(!r.holds);
        assert_eq!(r.classes[0].valuations[0].1, 4);
        assert_eq!(r.failing.unwrap().0, t.alpha);
    }

    #[test]
    fn t2_over_q() {
        let (b, p) = setup();
        let sols = solve_unit_plus_one(&b, 6).unwrap();
        let q = Field::rational();
        assert!(sols.iter().any(|s| s.alpha == Element::from_int(q, -9) && s.gamma == Element::from_int(q, -2)));
        assert!(check_condition_t2(&sols, &p).holds);
    }

    #[test]
    fn k_over_q() {
        let (b, p) = setup();
        let sols = solve_cube_sum(&b, 6).unwrap().solutions;
        let r = check_condition_k(&sols, &p);
        assert!(!r.holds);
        let q = Field::rational();
        let only: Vec<SUnitTriple> =
            sols.into_iter().filter(|t| t.alpha == Element::from_int(q, 9) && t.beta == Element::from_int(q, -1)).collect();
        assert_eq!(only.len(), 1);
        assert!(check_condition_k(&only, &p).holds);
    }
}
