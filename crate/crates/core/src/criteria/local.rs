use num_integer::Integer;
use num_traits::{One, Signed};

use super::{explicit_p_bound, standard_ledger, ClauseStatus, Verdict};
use crate::algebra::arith::is_prime;
use crate::algebra::{factor_mod_p, index_coprime, is_irreducible_over_q, IntPolynomial};
use crate::error::{Error, Result};
use crate::quadfield::{class_group, h3_divisibility_of_kzeta3, primes_above, Element, Field};

/// `x = u 3^r` with `u` a unit and `r >= 0`; returns `r`.
fn unit_times_three_power(field: Field, x: &Element) -> Result<Option<i64>> {
    if x.is_zero() || !x.is_integral() {
        return Ok(None);
    }
    let p = &primes_above(field, 3)?[0];
    let r = p.valuation(x).unwrap() / p.e() as i64;
    let three = Element::from_int(field, 3);
    let u = x.checked_div(&three.pow(r as u64))?;
    Ok((u.is_integral() && u.norm().abs().is_one()).then_some(r))
}

/// Local criterion for real quadratic `K = Q(sqrt d)`: `d = 2 mod 3`,
/// `3 | h_K h_{K(zeta_3)}` excluded, and `A, B, C` units times powers of 3.
pub fn check_local_quadratic(field: Field, a: &Element, b: &Element, c: &Element) -> Result<Verdict> {
    if !field.is_real_quadratic() {
        return Err(Error::PreconditionViolated(format!("{field} is not a real quadratic field")));
    }
    if [a, b, c].iter().any(|x| x.field() != field) {
        return Err(Error::FieldMismatch);
    }
    let d = field.d();
    let mut v = Verdict::new("local-quad");
    v.clause(
        "three-splitting",
        if d.rem_euclid(3) == 2 { ClauseStatus::Pass } else { ClauseStatus::Fail },
        format!("d = {d} = {} mod 3", d.rem_euclid(3)),
    );
    let h = class_group(field)?.h();
    v.clause(
        "class-3-torsion",
        if h % 3 == 0 { ClauseStatus::Fail } else { ClauseStatus::Pass },
        format!("h_K = {h}"),
    );
    let rep = h3_divisibility_of_kzeta3(field)?;
    v.clause(
        "h-kzeta3",
        if rep.divisible { ClauseStatus::Fail } else { ClauseStatus::Pass },
        format!("h({}) = {}; {}", rep.d_minus3d, rep.h_minus3d, rep.reduction),
    );
    let mut shapes = Vec::new();
    let mut ok = true;
    for (name, x) in [("A", a), ("B", b), ("C", c)] {
        match unit_times_three_power(field, x)? {
            Some(r) => shapes.push(format!("{name} = u*3^{r}")),
            None => {
                ok = false;
                shapes.push(format!("{name} = {x} is not a unit times a power of 3"));
            }
        }
    }
    v.clause("coeff-shape", if ok { ClauseStatus::Pass } else { ClauseStatus::Fail }, shapes.join("; "));
    if ok {
        let m = explicit_p_bound(field, a, b, c)?;
        v.explicit_p_bound = m;
        v.clause("p-bound", ClauseStatus::Pass, format!("computable part: p > {m}"));
    }
    standard_ledger(&mut v);
    v.note("S-unit condition on alpha + 1 = gamma^3 for such K taken from the cited quadratic argument, not searched");
    Ok(v.finish())
}

/// Inputs for the odd-degree criterion. Class numbers and the coefficient
/// shape are taken on trust.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddDegreeInputs {
    pub f: IntPolynomial,
    pub q: u64,
    pub h_k: u64,
    pub h_kzeta3: u64,
    pub coeffs_unit_times_three_power: bool,
}

enum Shape {
    /// `f = (x - r)^n mod q`.
    TotallyRamified,
    Inert,
    Other,
}

fn shape_mod(f: &IntPolynomial, q: u64, n: usize) -> Result<Shape> {
    let facs = factor_mod_p(f, q)?;
    Ok(match facs.as_slice() {
        [(g, e)] if g.degree() == Some(1) && *e as usize == n => Shape::TotallyRamified,
        [(g, 1)] if g.degree() == Some(n) => Shape::Inert,
        _ => Shape::Other,
    })
}

/// `Some(true)` when Dedekind applies, `None` when it cannot be used.
fn dedekind(f: &IntPolynomial, q: u64) -> Result<Option<bool>> {
    match index_coprime(f, q) {
        Ok(b) => Ok(Some(b)),
        Err(Error::PreconditionViolated(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn check_local_odd_degree(inp: &OddDegreeInputs) -> Result<Verdict> {
    let f = &inp.f;
    let n = f.degree().unwrap_or(0);
    if n % 2 == 0 {
        return Err(Error::EvenDegree(n));
    }
    if !is_irreducible_over_q(f)? {
        return Err(Error::ReduciblePolynomial);
    }
    let mut v = Verdict::new("local-odd");
    v.clause("odd-degree", ClauseStatus::Pass, format!("[K:Q] = {n}"));

    let q = inp.q;
    let g = (n as u64).gcd(&q.saturating_sub(1));
    let q_ok = q >= 5 && is_prime(q) && g == 1;
    v.clause(
        "q-condition",
        if q_ok { ClauseStatus::Pass } else { ClauseStatus::Fail },
        format!("q = {q}, gcd({n}, q - 1) = {g}"),
    );
    if is_prime(q) {
        let (st, detail) = match (shape_mod(f, q, n)?, dedekind(f, q)?) {
            (_, None) => (ClauseStatus::Inconclusive, "f is not monic; Dedekind's criterion not applied".to_string()),
            (_, Some(false)) => (ClauseStatus::Inconclusive, format!("{q} may divide the index of Z[x]/(f)")),
            (Shape::TotallyRamified, Some(true)) => (ClauseStatus::Pass, format!("f = (x - r)^{n} mod {q}, index prime to {q}")),
            (_, Some(true)) => (ClauseStatus::Fail, format!("f mod {q} is not a power of a linear factor")),
        };
        v.clause("q-ramification", st, detail);
    } else {
        v.clause("q-ramification", ClauseStatus::Fail, format!("{q} is not prime"));
    }

    let (st, detail) = match (shape_mod(f, 3, n)?, dedekind(f, 3)?) {
        (Shape::Inert, _) => (ClauseStatus::Pass, "f is irreducible mod 3: 3 is inert".to_string()),
        (_, None) => (ClauseStatus::Inconclusive, "f is not monic; Dedekind's criterion not applied".to_string()),
        (_, Some(false)) => (ClauseStatus::Inconclusive, "3 may divide the index of Z[x]/(f)".to_string()),
        (Shape::TotallyRamified, Some(true)) => {
            v.note("the prime above 3 is principal (not computed in degree > 2)");
            (ClauseStatus::Assumed, format!("3 = P^{n}; principality of P assumed"))
        }
        (Shape::Other, Some(true)) => (ClauseStatus::Fail, "3 is neither inert nor totally ramified".to_string()),
    };
    v.clause("three-splitting", st, detail);

    for (name, h, what) in [("class-3-torsion", inp.h_k, "h_K"), ("h-kzeta3", inp.h_kzeta3, "h_K(zeta_3)")] {
        if h % 3 == 0 {
            v.clause(name, ClauseStatus::Fail, format!("{what} = {h} (user-supplied)"));
        } else {
            v.clause(name, ClauseStatus::Assumed, format!("{what} = {h} (user-supplied)"));
            v.note(format!("{what} = {h} supplied by the user"));
        }
    }
    if inp.coeffs_unit_times_three_power {
        v.clause("coeff-shape", ClauseStatus::Assumed, "A, B, C declared to be units times powers of 3");
        v.note("coefficient shape supplied by the user");
    } else {
        v.clause("coeff-shape", ClauseStatus::Fail, "A, B, C not declared to be units times powers of 3");
    }
    v.explicit_p_bound = n as i64;
    v.clause("p-bound", ClauseStatus::Pass, format!("computable part: p > [K:Q] = {n}"));
    standard_ledger(&mut v);
    Ok(v.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::Overall;
    use crate::quadfield::make_field;

    #[test]
    fn quadratic_examples() {
        let k = make_field(2).unwrap();
        let e = |n: i64| Element::from_int(k, n);
        let v = check_local_quadratic(k, &e(3), &e(1), &e(1)).unwrap();
        assert_eq!(v.overall, Overall::AppliesModuloAssumptions);
        // 1 + w is a unit
        let v = check_local_quadratic(k, &(&e(9) * &Element::from_ints(k, 1, 1)), &e(1), &e(3)).unwrap();
        assert_eq!(v.overall, Overall::AppliesModuloAssumptions);
        let v = check_local_quadratic(k, &e(2), &e(1), &e(1)).unwrap();
        assert_eq!(v.clause_named("coeff-shape").unwrap().status, ClauseStatus::Fail);
        let k29 = make_field(29).unwrap();
        let one = Element::one(k29);
        let v = check_local_quadratic(k29, &one, &one, &one).unwrap();
        assert_eq!(v.overall, Overall::DoesNotApply);
        assert_eq!(v.clause_named("h-kzeta3").unwrap().status, ClauseStatus::Fail);
        let k7 = make_field(7).unwrap();
        let one = Element::one(k7);
        let v = check_local_quadratic(k7, &one, &one, &one).unwrap();
        assert_eq!(v.clause_named("three-splitting").unwrap().status, ClauseStatus::Fail);
    }

    fn inputs(coeffs: &[i64], q: u64) -> OddDegreeInputs {
        OddDegreeInputs { f: IntPolynomial::from_i64(coeffs), q, h_k: 1, h_kzeta3: 1, coeffs_unit_times_three_power: true }
    }

    #[test]
    fn odd_degree_examples() {
        let v = check_local_odd_degree(&inputs(&[-5, 0, 0, 1], 5)).unwrap();
        assert_eq!(v.clause_named("q-ramification").unwrap().status, ClauseStatus::Pass);
        assert_eq!(v.clause_named("q-condition").unwrap().status, ClauseStatus::Pass);
        assert_eq!(v.overall, Overall::AppliesModuloAssumptions);
        let v = check_local_odd_degree(&inputs(&[-5, 0, 0, 1], 7)).unwrap();
        assert_eq!(v.clause_named("q-ramification").unwrap().status, ClauseStatus::Fail);
        assert_eq!(v.overall, Overall::DoesNotApply);
        assert_eq!(check_local_odd_degree(&inputs(&[-2, 0, 1], 5)), Err(Error::EvenDegree(2)));
        assert_eq!(check_local_odd_degree(&inputs(&[-8, 0, 0, 1], 5)), Err(Error::ReduciblePolynomial));
    }
}
