use std::collections::BTreeSet;

use rayon::prelude::*;

use super::SUnitBasis;
use crate::error::{Error, Result};
use crate::quadfield::Element;

/// Default cap on candidate pairs examined by the solvers.
pub const DEFAULT_WORK_CAP: u64 = 20_000_000;

/// A solution of `alpha + beta = gamma^3` with `alpha, beta` S-units.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SUnitTriple {
    pub alpha_exps: Vec<i64>,
    pub beta_exps: Vec<i64>,
    pub alpha: Element,
    pub beta: Element,
    pub gamma: Element,
}

/// Classes found by a bounded search. Completeness holds only inside the box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeSumSolutions {
    pub bound: u64,
    /// Per free coordinate.
    pub bounds: Vec<u64>,
    pub bounded_search: bool,
    pub solutions: Vec<SUnitTriple>,
}

/// Representative of the class of `(alpha, beta, gamma)` under scaling by
/// `(eta^3, eta^3, eta)`: free exponents of `alpha` in `{0, 1, 2}`, its torsion
/// exponent reduced mod `gcd(3, w)`, and `gamma` the least of its images
/// under cube roots of unity.
pub fn canonicalize(basis: &SUnitBasis, alpha_exps: &[i64], beta_exps: &[i64], gamma: &Element) -> SUnitTriple {
    let (zeta, w) = basis.torsion();
    let w = w as i64;
    let mut a = alpha_exps.to_vec();
    let mut b = beta_exps.to_vec();
    let mut eta_exps = vec![0i64; a.len()];
    for j in 1..a.len() {
        let q = a[j].div_euclid(3);
        a[j] -= 3 * q;
        b[j] -= 3 * q;
        eta_exps[j] = -q;
    }
    // torsion: eta = zeta^s shifts torsion exponents by 3s mod w
    let s = if w % 3 == 0 {
        -(a[0].rem_euclid(w).div_euclid(3))
    } else {
        // 3 is invertible mod w (w = 2 or 4): 3^{-1} = 3 mod 4, 1 mod 2
        let inv3 = if w == 4 { 3 } else { 1 };
        -a[0] * inv3
    };
    a[0] = (a[0] + 3 * s).rem_euclid(w);
    b[0] = (b[0] + 3 * s).rem_euclid(w);
    eta_exps[0] = s;
    let eta = basis.element(&eta_exps);
    let mut g = gamma * &eta;
    if w % 3 == 0 {
        let cube_root_unity = zeta.pow(2);
        let g2 = &g * &cube_root_unity;
        let g3 = &g2 * &cube_root_unity;
        g = [g, g2, g3].into_iter().min().unwrap();
    }
    SUnitTriple {
        alpha: basis.element(&a),
        beta: basis.element(&b),
        alpha_exps: a,
        beta_exps: b,
        gamma: g,
    }
}

/// `gamma` with `gamma^3 = z`, after a valuation-mod-3 sieve at the S-primes.
pub fn cube_root_in_field(basis: &SUnitBasis, z: &Element) -> Option<Element> {
    if z.is_zero() {
        return Some(z.clone());
    }
    for p in basis.primes() {
        if p.valuation(z).unwrap() % 3 != 0 {
            return None;
        }
    }
    z.cube_roots().into_iter().next()
}

/// Canonical free residues of `alpha` together with its torsion choices.
fn alpha_candidates(basis: &SUnitBasis) -> Vec<Vec<i64>> {
    let (_, w) = basis.torsion();
    let tors: Vec<i64> = if w % 3 == 0 { vec![0, 1, 2] } else { vec![0] };
    let mut out: Vec<Vec<i64>> = tors.into_iter().map(|t| vec![t]).collect();
    for _ in 0..basis.rank() {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..3).map(move |r| {
                    let mut u = v.clone();
                    u.push(r);
                    u
                })
            })
            .collect();
    }
    out
}

/// Exponents `b` of a canonical `beta` coordinate compatible with residue `r`
/// of `alpha`: some shift `q` puts both `r + 3q` and `b + 3q` in `[-B, B]`.
fn beta_range(r: i64, bound: i64) -> Vec<i64> {
    let qs = (-bound..=bound).filter(|&q| (r + 3 * q).abs() <= bound);
    let set: BTreeSet<i64> = qs.flat_map(|q| (-bound - 3 * q)..=(bound - 3 * q)).collect();
    set.into_iter().collect()
}

fn cartesian(ranges: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for r in ranges {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                r.iter().map(move |&x| {
                    let mut u = v.clone();
                    u.push(x);
                    u
                })
            })
            .collect();
    }
    out
}

pub fn solve_cube_sum(basis: &SUnitBasis, bound: u64) -> Result<CubeSumSolutions> {
    solve_cube_sum_with_cap(basis, bound, DEFAULT_WORK_CAP)
}

pub fn solve_cube_sum_with_cap(basis: &SUnitBasis, bound: u64, cap: u64) -> Result<CubeSumSolutions> {
    solve_cube_sum_bounds(basis, &vec![bound; basis.rank()], cap)
}

/// Every class of solutions having a member whose free exponents (both
/// `alpha` and `beta`) satisfy `|e_j| <= bounds[j]`; all torsion values allowed.
pub fn solve_cube_sum_bounds(basis: &SUnitBasis, bounds: &[u64], cap: u64) -> Result<CubeSumSolutions> {
    if bounds.len() != basis.rank() {
        return Err(Error::PreconditionViolated(format!(
            "{} exponent bounds for rank {}",
            bounds.len(),
            basis.rank()
        )));
    }
    if bounds.iter().any(|&b| b == 0) {
        return Err(Error::PreconditionViolated("exponent bound must be at least 1".into()));
    }
    let (_, w) = basis.torsion();
    let alphas = alpha_candidates(basis);
    let mut work = 0u64;
    let mut jobs = Vec::new();
    for a in &alphas {
        let ranges: Vec<Vec<i64>> = std::iter::once((0..w as i64).collect())
            .chain(a[1..].iter().zip(bounds).map(|(&r, &b)| beta_range(r, b as i64)))
            .collect();
        work = work.saturating_add(ranges.iter().map(|r| r.len() as u64).product());
        if work > cap {
            return Err(Error::LimitExceeded(format!("cube-sum search above work cap {cap}")));
        }
        jobs.push((a.clone(), ranges));
    }
    let found: Vec<SUnitTriple> = jobs
        .par_iter()
        .flat_map_iter(|(a, ranges)| {
            let alpha = basis.element(a);
            cartesian(ranges)
                .into_iter()
                .filter_map(move |bexp| {
                    let beta = basis.element(&bexp);
                    let g = cube_root_in_field(basis, &(&alpha + &beta))?;
                    Some(canonicalize(basis, a, &bexp, &g))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let mut solutions = found;
    solutions.sort();
    solutions.dedup();
    Ok(CubeSumSolutions {
        bound: bounds.iter().copied().max().unwrap_or(0),
        bounds: bounds.to_vec(),
        bounded_search: true,
        solutions,
    })
}

/// A solution of `alpha + 1 = gamma^3` with `alpha` an S-unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitPlusOne {
    pub alpha_exps: Vec<i64>,
    pub alpha: Element,
    pub gamma: Element,
}

/// Solutions of `alpha + 1 = gamma^3` with `alpha` an S-unit whose free
/// exponents lie in `[-bound, bound]`, sorted by exponent vector.
pub fn solve_unit_plus_one(basis: &SUnitBasis, bound: u64) -> Result<Vec<UnitPlusOne>> {
    let b = bound as i64;
    let (_, w) = basis.torsion();
    let ranges: Vec<Vec<i64>> = std::iter::once((0..w as i64).collect())
        .chain((0..basis.rank()).map(|_| (-b..=b).collect()))
        .collect();
    let total: u64 = ranges.iter().map(|r| r.len() as u64).product();
    if total > DEFAULT_WORK_CAP {
        return Err(Error::LimitExceeded(format!("{total} candidates above work cap")));
    }
    let one = Element::one(basis.field());
    let mut out: Vec<UnitPlusOne> = cartesian(&ranges)
        .into_par_iter()
        .filter_map(|e| {
            let alpha = basis.element(&e);
            let g = cube_root_in_field(basis, &(&alpha + &one))?;
            Some(UnitPlusOne { alpha_exps: e, alpha, gamma: g })
        })
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::{primes_above, Field};
    use crate::sunits::s_unit_basis;

    fn q_basis() -> SUnitBasis {
        let q = Field::rational();
        s_unit_basis(q, &primes_above(q, 3).unwrap()).unwrap()
    }

    #[test]
    fn canonical_collapses() {
        let b = q_basis();
        let q = Field::rational();
        // (-27, 243, 6) ~ (1, -9, -2) after scaling by -1/27
        let t = canonicalize(&b, &[1, 3], &[0, 5], &Element::from_int(q, 6));
        assert_eq!(
            (t.alpha.clone(), t.beta.clone(), t.gamma.clone()),
            (Element::from_int(q, 1), Element::from_int(q, -9), Element::from_int(q, -2))
        );
        let t2 = canonicalize(&b, &t.alpha_exps, &t.beta_exps, &t.gamma);
        assert_eq!(t, t2);
        let t = canonicalize(&b, &[0, 3], &[1, 3], &Element::zero(q));
        assert_eq!((t.alpha, t.beta), (Element::from_int(q, 1), Element::from_int(q, -1)));
    }

    #[test]
    fn rational_classes() {
        let sols = solve_cube_sum(&q_basis(), 6).unwrap();
        let got: Vec<(String, String, String)> = sols
            .solutions
            .iter()
            .map(|t| (t.alpha.to_string(), t.beta.to_string(), t.gamma.to_string()))
            .collect();
        let want = [("1", "-1", "0"), ("1", "-9", "-2"), ("3", "-3", "0"), ("9", "-1", "2"), ("9", "-9", "0")];
        let want: Vec<(String, String, String)> =
            want.iter().map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string())).collect();
        assert_eq!(got, want);
        for t in &sols.solutions {
            assert_eq!(&t.alpha + &t.beta, t.gamma.pow(3));
        }
    }
}
