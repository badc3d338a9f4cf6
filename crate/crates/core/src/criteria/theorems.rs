use num_traits::{One, Signed};

use super::{
    explicit_p_bound, fmt_primes, s_k, s_prime, standard_ledger, CheckConfig, ClauseStatus, Verdict,
};
use crate::error::{Error, Result};
use crate::quadfield::{
    h3_divisibility_of_kzeta3, is_principal, s_class_group, Element, Field, PrimeIdeal,
};
use crate::sunits::{
    check_condition_k, check_condition_t1, check_condition_t2, s_unit_basis, solve_cube_sum_bounds,
    solve_unit_plus_one, ConditionReport, SUnitTriple,
};

fn require_totally_real(field: Field, coeffs: [&Element; 3]) -> Result<()> {
    if !field.is_totally_real() {
        return Err(Error::NotTotallyReal);
    }
    if coeffs.iter().any(|c| c.field() != field) {
        return Err(Error::FieldMismatch);
    }
    if coeffs.iter().any(|c| c.is_zero() || !c.is_integral()) {
        return Err(Error::PreconditionViolated("A, B, C must be nonzero integers of K".into()));
    }
    Ok(())
}

/// Cube-sum classes over `S'`, with primes not above 3 searched to the
/// configured extra bound.
fn cube_sum_classes(field: Field, sp: &[PrimeIdeal], cfg: &CheckConfig) -> Result<Vec<SUnitTriple>> {
    let basis = s_unit_basis(field, sp)?;
    let extra = cfg.extra_prime_bound.unwrap_or(cfg.sunit_bound);
    let mut bounds = Vec::new();
    if basis.fundamental_unit().is_some() {
        bounds.push(cfg.sunit_bound);
    }
    bounds.extend(basis.primes().iter().map(|p| if p.p() == 3 { cfg.sunit_bound } else { extra }));
    let mut sols = solve_cube_sum_bounds(&basis, &bounds, cfg.work_cap)?.solutions;
    if cfg.exclude_degenerate {
        sols.retain(|t| !t.gamma.is_zero());
    }
    Ok(sols)
}

fn bound_note(v: &mut Verdict, cfg: &CheckConfig) {
    v.note(format!("solver completeness at bound B = {} (no effective bound is available)", cfg.sunit_bound));
}

fn fmt_valuations(r: &ConditionReport, idx: usize) -> String {
    let parts: Vec<String> = r.classes[idx].valuations.iter().map(|(p, v)| format!("v_{p} = {v}")).collect();
    parts.join(", ")
}

fn condition_clause(v: &mut Verdict, name: &str, r: &ConditionReport, what: &str, cfg: &CheckConfig) {
    match &r.failing {
        None => v.clause(
            name,
            ClauseStatus::Bounded,
            format!("{what} holds on all {} classes found at bound {}", r.classes.len(), cfg.sunit_bound),
        ),
        Some((a, b, g)) => {
            let idx = r.classes.iter().position(|c| !c.ok).unwrap();
            v.clause(
                name,
                ClauseStatus::Fail,
                format!("{what} fails at ({a}, {b}, {g}): {}", fmt_valuations(r, idx)),
            );
            v.witness = Some((a.to_string(), b.to_string(), g.to_string()));
        }
    }
}

fn class_torsion_clause(v: &mut Verdict, field: Field, sp: &[PrimeIdeal]) -> Result<()> {
    let cl = s_class_group(field, sp)?;
    let st = if cl.has_3_torsion { ClauseStatus::Fail } else { ClauseStatus::Pass };
    v.clause(
        "class-3-torsion",
        st,
        format!("Cl_S'(K) has invariants {:?} (h = {})", cl.quotient.invariants, cl.h_full),
    );
    Ok(())
}

fn p_bound_clause(v: &mut Verdict, field: Field, a: &Element, b: &Element, c: &Element) -> Result<()> {
    let m = explicit_p_bound(field, a, b, c)?;
    v.explicit_p_bound = m;
    v.clause("p-bound", ClauseStatus::Pass, format!("computable part: p > {m}"));
    Ok(())
}

/// No asymptotic solution in `W_K`: `Cl_{S'}(K)[3] = 1` and the valuation
/// inequality at some `P | 3` for every cube-sum class over `S'`.
pub fn check_theorem_wk(field: Field, a: &Element, b: &Element, c: &Element, cfg: &CheckConfig) -> Result<Verdict> {
    require_totally_real(field, [a, b, c])?;
    let mut v = Verdict::new("wk");
    let sk = s_k(field)?;
    let sp = s_prime(field, a, b, c)?;
    v.clause("s-prime", ClauseStatus::Pass, format!("S' = {}", fmt_primes(&sp)));
    class_torsion_clause(&mut v, field, &sp)?;
    let sols = cube_sum_classes(field, &sp, cfg)?;
    let r = check_condition_t1(&sols, &sk);
    condition_clause(&mut v, "sunit-T1", &r, "|v_P(alpha/beta)| <= 3 v_P(3)", cfg);
    p_bound_clause(&mut v, field, a, b, c)?;
    standard_ledger(&mut v);
    bound_note(&mut v, cfg);
    Ok(v.finish())
}

/// The specialisation to `S' = S_K = {P}` principal with `3 | h_K h_{K(zeta_3)}`
/// excluded and the condition on `alpha + 1 = gamma^3`.
pub fn check_prop_main2(field: Field, a: &Element, b: &Element, c: &Element, cfg: &CheckConfig) -> Result<Verdict> {
    require_totally_real(field, [a, b, c])?;
    let mut v = Verdict::new("prop2");
    let sk = s_k(field)?;
    let sp = s_prime(field, a, b, c)?;
    let st = if sp == sk { ClauseStatus::Pass } else { ClauseStatus::Fail };
    v.clause("s-prime", st, format!("S' = {}, S_K = {}", fmt_primes(&sp), fmt_primes(&sk)));

    let single = sk.len() == 1 && !sk[0].is_split();
    let kind = if sk.len() == 2 {
        "split"
    } else if sk[0].is_ramified() {
        "ramified"
    } else {
        "inert"
    };
    v.clause(
        "three-splitting",
        if single { ClauseStatus::Pass } else { ClauseStatus::Fail },
        format!("3 is {kind}"),
    );

    let mut principal = true;
    for p in &sk {
        principal &= is_principal(field, &p.ideal())?.is_some();
    }
    v.clause(
        "principality",
        if principal { ClauseStatus::Pass } else { ClauseStatus::Fail },
        format!("S_K = {} principal: {principal}", fmt_primes(&sk)),
    );

    let rep = h3_divisibility_of_kzeta3(field)?;
    v.clause(
        "class-3-torsion",
        if rep.h_k % 3 == 0 { ClauseStatus::Fail } else { ClauseStatus::Pass },
        format!("h_K = {}", rep.h_k),
    );
    v.clause(
        "h-kzeta3",
        if rep.divisible { ClauseStatus::Fail } else { ClauseStatus::Pass },
        format!("h({}) = {}; {}", rep.d_minus3d, rep.h_minus3d, rep.reduction),
    );

    if single {
        let basis = s_unit_basis(field, &sk)?;
        let p = &sk[0];
        let mut sols = solve_unit_plus_one(&basis, cfg.sunit_bound)?;
        sols.retain(|s| p.valuation(&s.alpha).is_some_and(|x| x >= 0));
        let r = check_condition_t2(&sols, p);
        condition_clause(&mut v, "sunit-T2", &r, "v_P(alpha) <= 3 v_P(3)", cfg);
        bound_note(&mut v, cfg);
    } else {
        v.clause("sunit-T2", ClauseStatus::Fail, "needs a single prime above 3");
    }
    p_bound_clause(&mut v, field, a, b, c)?;
    standard_ledger(&mut v);
    Ok(v.finish())
}

fn is_unit(x: &Element) -> bool {
    x.is_integral() && x.norm().abs().is_one()
}

/// `C` a unit, or a unit times a rational prime other than 3.
fn c_shape(field: Field, c: &Element) -> Result<Option<String>> {
    if is_unit(c) {
        return Ok(Some("C is a unit".into()));
    }
    let n = c.norm();
    for q in crate::algebra::arith::prime_divisors(n.numer())? {
        if q == 3 {
            continue;
        }
        let u = c.scale(&num_rational::BigRational::new(1.into(), q.into()));
        if is_unit(&u) {
            return Ok(Some(format!("C = ({u}) * {q}")));
        }
    }
    let _ = field;
    Ok(None)
}

fn rational_integer(x: &Element) -> bool {
    x.is_rational() && x.is_integral()
}

/// No asymptotic solution outside the exceptional set `{(u, +-u, c)}` when 3
/// is inert, `v_P(A) = 1`, `v_P(B) in {0, 2}` and every class has
/// `v_P(alpha/beta) = 2`.
pub fn check_theorem_k(field: Field, a: &Element, b: &Element, c: &Element, cfg: &CheckConfig) -> Result<Verdict> {
    require_totally_real(field, [a, b, c])?;
    let mut v = Verdict::new("overk");
    let n = field.degree();
    if n % 2 == 1 {
        v.clause("es", ClauseStatus::Pass, format!("[K:Q] = {n} is odd"));
    } else {
        v.clause("es", ClauseStatus::Assumed, format!("[K:Q] = {n} is even; Eichler-Shimura conjecture for K assumed"));
        v.note("Eichler-Shimura conjecture over K");
    }
    let sk = s_k(field)?;
    let inert = sk.len() == 1 && sk[0].is_inert();
    v.clause(
        "three-splitting",
        if inert { ClauseStatus::Pass } else { ClauseStatus::Fail },
        format!("primes above 3: {}", fmt_primes(&sk)),
    );
    let p = &sk[0];
    let (va, vb) = (p.valuation(a).unwrap(), p.valuation(b).unwrap());
    let shape = inert && va == 1 && (vb == 0 || vb == 2);
    v.clause(
        "coeff-shape",
        if shape { ClauseStatus::Pass } else { ClauseStatus::Fail },
        format!("v_P(A) = {va}, v_P(B) = {vb}"),
    );
    match c_shape(field, c)? {
        Some(d) => v.clause("coeff-shape-c", ClauseStatus::Pass, d),
        None => v.clause("coeff-shape-c", ClauseStatus::Fail, format!("C = {c} is neither a unit nor a unit times a prime other than 3")),
    }
    let sp = s_prime(field, a, b, c)?;
    class_torsion_clause(&mut v, field, &sp)?;
    let sols = cube_sum_classes(field, &sp, cfg)?;
    let r = check_condition_k(&sols, p);
    condition_clause(&mut v, "sunit-K", &r, "v_P(alpha/beta) = 2", cfg);
    if [a, b, c].iter().all(|x| rational_integer(x)) {
        v.clause("exceptional-set", ClauseStatus::Pass, "A, B, C are rational integers: S is empty");
    } else {
        v.clause("exceptional-set", ClauseStatus::Pass, "solutions (u, +-u, c) with u a unit are excluded");
    }
    p_bound_clause(&mut v, field, a, b, c)?;
    standard_ledger(&mut v);
    bound_note(&mut v, cfg);
    Ok(v.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::Overall;
    use crate::quadfield::make_field;

    fn q(n: i64) -> Element {
        Element::from_int(Field::rational(), n)
    }

    #[test]
    fn wk_over_q() {
        let v = check_theorem_wk(Field::rational(), &q(1), &q(1), &q(1), &CheckConfig::with_bound(6)).unwrap();
        assert_eq!(v.overall, Overall::AppliesModuloAssumptions);
        assert_eq!(v.clause_named("sunit-T1").unwrap().status, ClauseStatus::Bounded);
    }

    #[test]
    fn overk_over_q() {
        let v = check_theorem_k(Field::rational(), &q(3), &q(1), &q(1), &CheckConfig::with_bound(6)).unwrap();
        assert_eq!(v.overall, Overall::DoesNotApply);
        assert_eq!(v.witness, Some(("1".into(), "-1".into(), "0".into())));
        let mut cfg = CheckConfig::with_bound(6);
        cfg.exclude_degenerate = true;
        let v = check_theorem_k(Field::rational(), &q(1), &q(1), &q(1), &cfg).unwrap();
        assert_eq!(v.overall, Overall::DoesNotApply);
        assert_eq!(v.clause_named("sunit-K").unwrap().status, ClauseStatus::Fail);
    }

    #[test]
    fn prop2_fields() {
        let cfg = CheckConfig::with_bound(4);
        let k = make_field(2).unwrap();
        let one = Element::one(k);
        let v = check_prop_main2(k, &one, &one, &one, &cfg).unwrap();
        assert_eq!(v.overall, Overall::AppliesModuloAssumptions, "{v:?}");
        let k = make_field(29).unwrap();
        let one = Element::one(k);
        let v = check_prop_main2(k, &one, &one, &one, &cfg).unwrap();
        assert_eq!(v.overall, Overall::DoesNotApply);
        assert_eq!(v.clause_named("h-kzeta3").unwrap().status, ClauseStatus::Fail);
        let k = make_field(3).unwrap();
        let one = Element::one(k);
        let v = check_prop_main2(k, &one, &one, &one, &cfg).unwrap();
        assert_eq!(v.clause_named("three-splitting").unwrap().status, ClauseStatus::Pass);
    }

    #[test]
    fn wk_sqrt2() {
        let k = make_field(2).unwrap();
        let e = |n: i64| Element::from_int(k, n);
        let v = check_theorem_wk(k, &e(3), &e(1), &e(1), &CheckConfig::with_bound(4)).unwrap();
        assert_eq!(v.explicit_p_bound, 4);
        assert_eq!(v.overall, Overall::AppliesModuloAssumptions, "{v:?}");
    }
}
