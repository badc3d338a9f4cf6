//! Brute-force searches used as oracles and sanity checks.

use rayon::prelude::*;

use crate::criteria::s_k;
use crate::error::{Error, Result};
use crate::quadfield::{Element, Field, Ideal};
use crate::sunits::{canonicalize, SUnitBasis, SUnitTriple};

/// A solution of `A a^p + B b^p = C c^3` with its flags.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionRecord {
    pub a: Element,
    pub b: Element,
    pub c: Element,
    pub trivial: bool,
    pub primitive: bool,
    pub in_w_k: bool,
    pub in_exceptional_s: bool,
}

/// Equation data shared by the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub field: Field,
    pub big_a: Element,
    pub big_b: Element,
    pub big_c: Element,
    pub p: u64,
}

impl Equation {
    pub fn new(big_a: Element, big_b: Element, big_c: Element, p: u64) -> Result<Self> {
        let field = big_a.field();
        if big_b.field() != field || big_c.field() != field {
            return Err(Error::FieldMismatch);
        }
        if !crate::algebra::arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if big_c.is_zero() {
            return Err(Error::PreconditionViolated("C must be nonzero".into()));
        }
        Ok(Equation { field, big_a, big_b, big_c, p })
    }

    pub fn from_ints(abc: [i64; 3], p: u64) -> Result<Self> {
        let q = Field::rational();
        let e = |n| Element::from_int(q, n);
        Self::new(e(abc[0]), e(abc[1]), e(abc[2]), p)
    }

    fn lhs(&self, a: &Element, b: &Element) -> Element {
        &self.big_a * &a.pow(self.p) + &self.big_b * &b.pow(self.p)
    }
}

fn is_unit(x: &Element) -> bool {
    use num_traits::{One, Signed};
    !x.is_zero() && x.is_integral() && x.norm().abs().is_one()
}

pub fn classify_solution(eq: &Equation, a: &Element, b: &Element, c: &Element) -> Result<SolutionRecord> {
    if eq.lhs(a, b) != &eq.big_c * &c.pow(3) {
        return Err(Error::NotASolution);
    }
    let trivial = a.is_zero() || b.is_zero() || c.is_zero();
    let gens: Vec<Element> = [a, b, c].into_iter().filter(|x| !x.is_zero()).cloned().collect();
    let primitive = !gens.is_empty() && Ideal::from_generators(eq.field, &gens)?.is_unit();
    let sk = s_k(eq.field)?;
    let ab = a * b;
    let divides_ab = |p: &crate::quadfield::PrimeIdeal| ab.is_zero() || p.valuation(&ab).unwrap() > 0;
    let in_w_k = primitive && !trivial && sk.iter().all(divides_ab);
    let in_exceptional_s = is_unit(a) && (b == a || *b == -a) && !c.is_zero();
    if in_w_k {
        for p in &sk {
            let vc = p.valuation(&eq.big_c).unwrap();
            if (eq.p as i64) > vc {
                let da = p.valuation(a).unwrap() > 0;
                let db = p.valuation(b).unwrap() > 0;
                if da == db {
                    return Err(Error::ConsistencyViolated(format!(
                        "{p} divides {} of a, b",
                        if da { "both" } else { "neither" }
                    )));
                }
            }
        }
    }
    Ok(SolutionRecord { a: a.clone(), b: b.clone(), c: c.clone(), trivial, primitive, in_w_k, in_exceptional_s })
}

/// Elements whose integral-basis coordinates lie in `[-h, h]`.
pub fn box_elements(field: Field, h: i64) -> Vec<Element> {
    if field.is_rational() {
        (-h..=h).map(|x| Element::from_int(field, x)).collect()
    } else {
        (-h..=h).flat_map(|x| (-h..=h).map(move |y| Element::from_ints(field, x, y))).collect()
    }
}

fn in_box(x: &Element, h: i64) -> bool {
    use num_bigint::BigInt;
    let hb = BigInt::from(h);
    match x.integral_coords() {
        Some((a, b)) => a.magnitude() <= hb.magnitude() && b.magnitude() <= hb.magnitude(),
        None => false,
    }
}

pub const DEFAULT_SEARCH_CAP: u64 = 50_000_000;

pub fn enumerate_solutions(eq: &Equation, h: i64, cap: u64) -> Result<Vec<SolutionRecord>> {
    enumerate_solutions_sharded(eq, h, cap, rayon::current_num_threads().max(1))
}

/// All solutions with `a, b, c` in the coordinate box of height `h`, sorted.
/// The `a`-range is split into `shards` chunks searched in parallel.
pub fn enumerate_solutions_sharded(eq: &Equation, h: i64, cap: u64, shards: usize) -> Result<Vec<SolutionRecord>> {
    if h < 1 {
        return Err(Error::PreconditionViolated("box height must be at least 1".into()));
    }
    let elems = box_elements(eq.field, h);
    let work = (elems.len() as u64).saturating_mul(elems.len() as u64);
    if work > cap {
        return Err(Error::LimitExceeded(format!("{work} candidate pairs above work cap {cap}")));
    }
    let chunk = elems.len().div_ceil(shards.max(1));
    let parts: Vec<Result<Vec<SolutionRecord>>> = elems
        .par_chunks(chunk.max(1))
        .map(|chunk| {
            let mut out = Vec::new();
            for a in chunk {
                for b in &elems {
                    let rhs = eq.lhs(a, b).checked_div(&eq.big_c)?;
                    for c in rhs.cube_roots() {
                        if in_box(&c, h) {
                            out.push(classify_solution(eq, a, b, &c)?);
                        }
                    }
                }
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for p in parts {
        all.extend(p?);
    }
    all.sort();
    Ok(all)
}

/// Naive loop over all pairs of S-units with free exponents in
/// `[-bound, bound]`, canonicalised like the solver's output.
pub fn brute_sunit_box(basis: &SUnitBasis, bound: u64, cap: u64) -> Result<Vec<SUnitTriple>> {
    let b = bound as i64;
    let (_, w) = basis.torsion();
    let mut vecs: Vec<Vec<i64>> = (0..w as i64).map(|t| vec![t]).collect();
    for _ in 0..basis.rank() {
        vecs = vecs
            .into_iter()
            .flat_map(|v| {
                (-b..=b).map(move |e| {
                    let mut u = v.clone();
                    u.push(e);
                    u
                })
            })
            .collect();
    }
    let n = vecs.len() as u64;
    if n.saturating_mul(n) > cap {
        return Err(Error::LimitExceeded(format!("{} pairs above work cap {cap}", n.saturating_mul(n))));
    }
    let units: Vec<(Vec<i64>, Element)> = vecs.into_iter().map(|v| {
        let e = basis.element(&v);
        (v, e)
    }).collect();
    let mut out: Vec<SUnitTriple> = units
        .par_iter()
        .flat_map_iter(|(va, a)| {
            units
                .iter()
                .filter_map(|(vb, bb)| {
                    let g = (a + bb).cube_roots().into_iter().next()?;
                    Some(canonicalize(basis, va, vb, &g))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::primes_above;
    use crate::sunits::{s_unit_basis, solve_cube_sum};

    fn q(n: i64) -> Element {
        Element::from_int(Field::rational(), n)
    }

    #[test]
    fn flags() {
        let eq = Equation::from_ints([1, 1, 1], 5).unwrap();
        assert!(classify_solution(&eq, &q(1), &q(-1), &q(0)).unwrap().trivial);
        assert!(classify_solution(&eq, &q(0), &q(1), &q(1)).unwrap().trivial);
        assert_eq!(classify_solution(&eq, &q(1), &q(1), &q(1)), Err(Error::NotASolution));
        let eq = Equation::from_ints([2, 1, 1], 5).unwrap();
        let r = classify_solution(&eq, &q(1), &q(-1), &q(1)).unwrap();
        assert!(!r.trivial && r.primitive && r.in_exceptional_s && !r.in_w_k);
    }

    #[test]
    fn small_box() {
        let eq = Equation::from_ints([2, 1, 1], 5).unwrap();
        let sols = enumerate_solutions(&eq, 2, DEFAULT_SEARCH_CAP).unwrap();
        assert!(sols.iter().any(|r| (r.a.clone(), r.b.clone(), r.c.clone()) == (q(1), q(-1), q(1))));
    }

    #[test]
    fn brute_matches_solver_over_q() {
        let f = Field::rational();
        let b = s_unit_basis(f, &primes_above(f, 3).unwrap()).unwrap();
        for bound in 1..=4 {
            let brute = brute_sunit_box(&b, bound, u64::MAX).unwrap();
            assert_eq!(brute, solve_cube_sum(&b, bound).unwrap().solutions);
        }
    }
}
