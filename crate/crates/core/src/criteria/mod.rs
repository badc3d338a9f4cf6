//! Hypothesis checkers producing verdicts with an assumption ledger.

mod local;
mod theorems;

use std::fmt;

use crate::error::Result;
use crate::quadfield::{primes_above, Element, Field, PrimeIdeal};
use crate::sunits::{v3, DEFAULT_WORK_CAP};

pub use local::{check_local_odd_degree, check_local_quadratic, OddDegreeInputs};
pub use theorems::{check_prop_main2, check_theorem_k, check_theorem_wk};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClauseStatus {
    Pass,
    Fail,
    Assumed,
    Bounded,
    /// The test could not decide (e.g. Dedekind's criterion does not apply).
    Inconclusive,
}

impl ClauseStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClauseStatus::Pass => "pass",
            ClauseStatus::Fail => "fail",
            ClauseStatus::Assumed => "assumed",
            ClauseStatus::Bounded => "bounded",
            ClauseStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Overall {
    Applies,
    DoesNotApply,
    AppliesModuloAssumptions,
}

impl fmt::Display for Overall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Overall::Applies => "applies",
            Overall::DoesNotApply => "does-not-apply",
            Overall::AppliesModuloAssumptions => "applies-modulo-assumptions",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub status: ClauseStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: String,
    pub clauses: Vec<Clause>,
    pub explicit_p_bound: i64,
    pub ledger: Vec<String>,
    /// First failing solution `(alpha, beta, gamma)` of an S-unit clause.
    pub witness: Option<(String, String, String)>,
    pub overall: Overall,
}

impl Verdict {
    pub(crate) fn new(theorem: &str) -> Self {
        Verdict {
            theorem: theorem.to_string(),
            clauses: Vec::new(),
            explicit_p_bound: 0,
            ledger: Vec::new(),
            witness: None,
            overall: Overall::Applies,
        }
    }

    pub(crate) fn clause(&mut self, name: &str, status: ClauseStatus, detail: impl Into<String>) {
        self.clauses.push(Clause { name: name.to_string(), status, detail: detail.into() });
    }

    pub(crate) fn note(&mut self, entry: impl Into<String>) {
        self.ledger.push(entry.into());
    }

    /// Fixes `overall` from the clauses and ledger.
    pub(crate) fn finish(mut self) -> Self {
        for c in &self.clauses {
            if c.status == ClauseStatus::Inconclusive {
                let e = format!("clause {} undecided, treated as holding", c.name);
                if !self.ledger.contains(&e) {
                    self.ledger.push(e);
                }
            }
        }
        self.overall = if self.clauses.iter().any(|c| c.status == ClauseStatus::Fail) {
            Overall::DoesNotApply
        } else if !self.ledger.is_empty() || self.clauses.iter().any(|c| c.status != ClauseStatus::Pass) {
            Overall::AppliesModuloAssumptions
        } else {
            Overall::Applies
        };
        self
    }

    pub fn clause_named(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

/// Knobs for the S-unit searches run by the checkers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub sunit_bound: u64,
    /// Exponent bound for primes of `S'` not above 3; defaults to `sunit_bound`.
    pub extra_prime_bound: Option<u64>,
    pub work_cap: u64,
    /// Drop solutions with `gamma = 0` before evaluating the S-unit clauses.
    pub exclude_degenerate: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { sunit_bound: 4, extra_prime_bound: None, work_cap: DEFAULT_WORK_CAP, exclude_degenerate: false }
    }
}

impl CheckConfig {
    pub fn with_bound(bound: u64) -> Self {
        CheckConfig { sunit_bound: bound, ..Default::default() }
    }
}

/// Primes above 3.
pub fn s_k(field: Field) -> Result<Vec<PrimeIdeal>> {
    primes_above(field, 3)
}

/// Primes dividing `3ABC`.
pub fn s_prime(field: Field, a: &Element, b: &Element, c: &Element) -> Result<Vec<PrimeIdeal>> {
    let prod = &(&(a * b) * c) * &Element::from_int(field, 3);
    let n = prod.norm();
    let mut out = Vec::new();
    for p in crate::algebra::arith::prime_divisors(n.numer())? {
        for q in primes_above(field, p)? {
            if q.valuation(&prod).is_some_and(|v| v > 0) {
                out.push(q);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Largest of `3v_P(3) + v_P(ABC)`, `|3v_P(3) +- v_P(A/B)|`, `v_P(C)` over
/// `P | 3`, and `[K:Q]`.
pub fn explicit_p_bound(field: Field, a: &Element, b: &Element, c: &Element) -> Result<i64> {
    let mut m = field.degree() as i64;
    for p in s_k(field)? {
        let v = |x: &Element| p.valuation(x).expect("nonzero coefficient");
        let (va, vb, vc, t) = (v(a), v(b), v(c), 3 * v3(&p));
        m = m.max(t + va + vb + vc).max((t + va - vb).abs()).max((t - va + vb).abs()).max(vc);
    }
    Ok(m)
}

pub(crate) fn standard_ledger(v: &mut Verdict) {
    v.note("modularity of the Frey curve for p beyond an ineffective constant D_{K,A,B,C}");
    v.note("irreducibility of the mod-p representation for p large");
    v.note("level lowering to an elliptic curve with a 3-torsion point");
    v.note("ineffective constant V_{K,A,B,C}: only the computable part of the p-bound is reported");
}

pub(crate) fn fmt_primes(ps: &[PrimeIdeal]) -> String {
    let parts: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::make_field;

    #[test]
    fn p_bound_examples() {
        let k = make_field(2).unwrap();
        let e = |n: i64| Element::from_int(k, n);
        assert_eq!(explicit_p_bound(k, &e(3), &e(1), &e(1)).unwrap(), 4);
        assert_eq!(explicit_p_bound(k, &e(9), &e(3), &e(1)).unwrap(), 6);
        let q = Field::rational();
        let one = Element::one(q);
        assert_eq!(explicit_p_bound(q, &one, &one, &one).unwrap(), 3);
    }

    #[test]
    fn s_prime_sets() {
        let k = make_field(2).unwrap();
        let e = |n: i64| Element::from_int(k, n);
        let s = s_prime(k, &e(7), &e(1), &e(2)).unwrap();
        // 3 inert, 7 split, 2 ramified
        assert_eq!(s.len(), 4);
        assert_eq!(s_prime(k, &e(1), &e(1), &e(1)).unwrap(), s_k(k).unwrap());
    }

    #[test]
    fn overall_rules() {
        let mut v = Verdict::new("t");
        v.clause("a", ClauseStatus::Pass, "");
        assert_eq!(v.clone().finish().overall, Overall::Applies);
        v.clause("b", ClauseStatus::Bounded, "");
        assert_eq!(v.clone().finish().overall, Overall::AppliesModuloAssumptions);
        v.clause("c", ClauseStatus::Fail, "");
        assert_eq!(v.finish().overall, Overall::DoesNotApply);
    }
}
