use std::fmt;

use super::{mu_of, FreyParams};
use crate::error::{Error, Result};
use crate::quadfield::{Element, PrimeIdeal};
use crate::sunits::v3;

/// `constant + p_coefficient * p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearInP {
    pub constant: i64,
    pub p_coefficient: i64,
}

impl LinearInP {
    pub fn new(constant: i64, p_coefficient: i64) -> Self {
        LinearInP { constant, p_coefficient }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(c, 0)
    }

    pub fn eval(&self, p: u64) -> i64 {
        self.constant + self.p_coefficient * p as i64
    }
}

impl fmt::Display for LinearInP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p_coefficient < 0 {
            write!(f, "{} - {}·p", self.constant, -self.p_coefficient)
        } else {
            write!(f, "{} + {}·p", self.constant, self.p_coefficient)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    Good,
    Multiplicative,
    PotentiallyMultiplicative,
    PotentiallyGood,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InertiaClaim {
    PDivides,
    In3Or6,
    PNotDivides,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionVerdict {
    pub prime: PrimeIdeal,
    pub kind: ReductionKind,
    pub inertia_claim: InertiaClaim,
    pub v_delta: LinearInP,
    pub v_j: LinearInP,
}

fn val(p: &PrimeIdeal, x: &Element) -> i64 {
    p.valuation(x).expect("nonzero")
}

fn val0(p: &PrimeIdeal, x: &Element) -> i64 {
    p.valuation(x).unwrap_or(i64::MAX)
}

/// Reduction at `q` not dividing `3ABC`: good, or multiplicative with
/// `v_q(Delta) = p v_q(a b^3)`.
pub fn classify_away_from_sprime(params: &FreyParams, q: &PrimeIdeal) -> Result<ReductionVerdict> {
    let abc3 = &(&params.big_a * &params.big_b) * &(&params.big_c * &Element::from_int(params.field(), 3));
    if val(q, &abc3) > 0 {
        return Err(Error::PreconditionViolated(format!("{q} divides 3ABC")));
    }
    if params.a.is_zero() || params.b.is_zero() {
        return Err(Error::SingularModel);
    }
    let (va, vb) = (val(q, &params.a), val(q, &params.b));
    if va > 0 && vb > 0 {
        return Err(Error::PreconditionViolated(format!("(a, b, c) is not primitive at {q}")));
    }
    let m = va + 3 * vb;
    let v_delta = LinearInP::new(0, m);
    if m == 0 {
        // c4 = 9 C^3 c (9 A a^p + B b^p)
        let nine_ab = &Element::from_int(params.field(), 9) * &params.a_term() + params.b_term();
        let vc4 = val0(q, &params.c).saturating_add(val0(q, &nine_ab));
        let vj = if vc4 == i64::MAX { i64::MAX } else { 3 * vc4 };
        return Ok(ReductionVerdict {
            prime: q.clone(),
            kind: ReductionKind::Good,
            inertia_claim: InertiaClaim::PNotDivides,
            v_delta,
            v_j: LinearInP::constant(vj),
        });
    }
    Ok(ReductionVerdict {
        prime: q.clone(),
        kind: ReductionKind::Multiplicative,
        inertia_claim: InertiaClaim::PNotDivides,
        v_delta,
        v_j: LinearInP::new(0, -m),
    })
}

/// `2 + 3 v_P(3)` above 3, `2 + 6 v_P(2)` elsewhere.
pub fn conductor_exponent_bound(p: &PrimeIdeal) -> i64 {
    if p.p() == 3 {
        2 + 3 * v3(p)
    } else if p.p() == 2 {
        2 + 6 * p.e() as i64
    } else {
        2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DividesWhich {
    PDividesA,
    PDividesB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VjAt3 {
    pub vj: LinearInP,
    /// For every prime `p` above this value, `vj(p) < 0` and `p` does not
    /// divide `vj(p)`. `None` when the constant term vanishes.
    pub negative_coprime_beyond: Option<i64>,
}

/// `v_P(j)` for `P | 3` as a function of `p`, when `P` divides `a` or `b`
/// to order `v`.
pub fn vj_symbolic_at_3(
    big_a: &Element,
    big_b: &Element,
    prime: &PrimeIdeal,
    which: DividesWhich,
    v: i64,
) -> Result<VjAt3> {
    if prime.p() != 3 {
        return Err(Error::PreconditionViolated(format!("{prime} does not lie over 3")));
    }
    if v <= 0 {
        return Err(Error::PreconditionViolated("v must be positive".into()));
    }
    let (va, vb, t) = (val(prime, big_a), val(prime, big_b), 3 * v3(prime));
    let vj = match which {
        DividesWhich::PDividesA => LinearInP::new(t + vb - va, -v),
        DividesWhich::PDividesB => LinearInP::new(3 * (t + va - vb), -3 * v),
    };
    let c0 = vj.constant;
    let c1 = -vj.p_coefficient;
    let negative_coprime_beyond = (c0 != 0).then(|| c0.abs().max(c0.div_euclid(c1)));
    Ok(VjAt3 { vj, negative_coprime_beyond })
}

/// `max{3 v_P(3) + v_P(ABC), |3 v_P(3) + v_P(A/B)|, |3 v_P(3) - v_P(A/B)|}`.
pub fn p_bound_at_3(big_a: &Element, big_b: &Element, big_c: &Element, prime: &PrimeIdeal) -> i64 {
    let t = 3 * v3(prime);
    let (va, vb, vc) = (val(prime, big_a), val(prime, big_b), val(prime, big_c));
    let r = va - vb;
    (t + va + vb + vc).max((t + r).abs()).max((t - r).abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KrausDirection {
    Forward,
    Backward,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KrausOutcome {
    /// The inertia image has one of these sizes.
    InertiaIn(Vec<u32>),
    /// The forward clause says nothing for this valuation.
    NoConclusion,
    /// Whether an inertia image of size 3 or 6 is compatible with the valuation.
    Admits(bool),
}

/// Inertia at `P | 3` for potentially good reduction, 3 unramified:
/// `v in {4, 10}` forces size 3 or 6; size 3 or 6 forces `v mod 12 in {0, 4, 6, 10}`.
pub fn kraus_inertia(v_delta: i64, direction: KrausDirection) -> KrausOutcome {
    let r = v_delta.rem_euclid(12);
    match direction {
        KrausDirection::Forward if r == 4 || r == 10 => KrausOutcome::InertiaIn(vec![3, 6]),
        KrausDirection::Forward => KrausOutcome::NoConclusion,
        KrausDirection::Backward => KrausOutcome::Admits([0, 4, 6, 10].contains(&r)),
    }
}

/// Reduction at the inert prime `P` over 3 when `v_P(A) = 1`, `v_P(B) in {0, 2}`.
pub fn classify_at_3_over_k(params: &FreyParams, prime: &PrimeIdeal) -> Result<ReductionVerdict> {
    if prime.p() != 3 || !prime.is_inert() || prime.field().is_rational() {
        return Err(Error::PreconditionViolated(format!("{prime} is not an inert prime over 3")));
    }
    let va = val(prime, &params.big_a);
    let vb = val(prime, &params.big_b);
    if va != 1 {
        return Err(Error::HypothesisViolated(format!("v_P(A) = {va}, expected 1")));
    }
    if vb != 0 && vb != 2 {
        return Err(Error::HypothesisViolated(format!("v_P(B) = {vb}, expected 0 or 2")));
    }
    if params.a.is_zero() || params.b.is_zero() {
        return Err(Error::SingularModel);
    }
    let bound = p_bound_at_3(&params.big_a, &params.big_b, &params.big_c, prime);
    if params.p as i64 <= bound {
        return Err(Error::PreconditionViolated(format!("p = {} is not above {bound}", params.p)));
    }
    let vc = val(prime, &params.big_c);
    let (pa, pb) = (val(prime, &params.a), val(prime, &params.b));
    let v_delta = LinearInP::new(3 * v3(prime) + va + 3 * vb + 8 * vc, pa + 3 * pb);
    if pa > 0 || pb > 0 {
        let which = if pa > 0 { DividesWhich::PDividesA } else { DividesWhich::PDividesB };
        let s = vj_symbolic_at_3(&params.big_a, &params.big_b, prime, which, pa.max(pb))?;
        return Ok(ReductionVerdict {
            prime: prime.clone(),
            kind: ReductionKind::PotentiallyMultiplicative,
            inertia_claim: InertiaClaim::PDivides,
            v_delta,
            v_j: s.vj,
        });
    }
    let claim = match kraus_inertia(v_delta.constant, KrausDirection::Forward) {
        KrausOutcome::InertiaIn(_) => InertiaClaim::In3Or6,
        _ => InertiaClaim::Unknown,
    };
    let w = super::frey_model(params)?;
    Ok(ReductionVerdict {
        prime: prime.clone(),
        kind: ReductionKind::PotentiallyGood,
        inertia_claim: claim,
        v_delta,
        v_j: LinearInP::constant(val(prime, &w.j)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JPrimeCase {
    /// `0 <= v_P(mu) <= v_P(3)`
    Low,
    /// `v_P(3) < v_P(mu) <= 3 v_P(3)`
    Middle,
    /// `3 v_P(3) < v_P(mu) <= 6 v_P(3)`
    High,
    Outside,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JPrimeReport {
    pub v_mu: i64,
    pub v_jprime: i64,
    pub residue_mod_3: i64,
    pub case: JPrimeCase,
}

/// `v_P` of `j' = (mu + 27)(mu + 3)^3 / mu`.
pub fn jprime_valuation_from_mu(mu: &Element, prime: &PrimeIdeal) -> Result<JPrimeReport> {
    let f = mu.field();
    let shifted = |n: i64| mu + &Element::from_int(f, n);
    for (x, what) in [(mu.clone(), "mu = 0"), (shifted(27), "mu = -27"), (shifted(3), "mu = -3")] {
        if x.is_zero() {
            return Err(Error::DivisionByZero(what.into()));
        }
    }
    let v_mu = val(prime, mu);
    let v_jprime = val(prime, &shifted(27)) + 3 * val(prime, &shifted(3)) - v_mu;
    let t = v3(prime);
    let case = match v_mu {
        v if 0 <= v && v <= t => JPrimeCase::Low,
        v if t < v && v <= 3 * t => JPrimeCase::Middle,
        v if 3 * t < v && v <= 6 * t => JPrimeCase::High,
        _ => JPrimeCase::Outside,
    };
    if case != JPrimeCase::Outside && v_jprime < 0 {
        return Err(Error::ConsistencyViolated(format!("v_P(j') = {v_jprime} < 0 with v_P(mu) = {v_mu}")));
    }
    Ok(JPrimeReport { v_mu, v_jprime, residue_mod_3: v_jprime.rem_euclid(3), case })
}

/// `v_P(j')` for the curve attached to `params`.
pub fn jprime_of_params(params: &FreyParams, prime: &PrimeIdeal) -> Result<JPrimeReport> {
    jprime_valuation_from_mu(&mu_of(params)?, prime)
}
