//! Command-line frontend: argument parsing, dispatch and report rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use pp3_core::algebra::IntPolynomial;
use pp3_core::criteria::{
    check_local_odd_degree, check_local_quadratic, check_prop_main2, check_theorem_k, check_theorem_wk, s_k,
    s_prime, CheckConfig, OddDegreeInputs, Overall, Verdict,
};
use pp3_core::frey::{
    classify_at_3_over_k, classify_away_from_sprime, conductor_exponent_bound, frey_model, j_from_mu, mu_of,
    FreyParams, ReductionVerdict,
};
use pp3_core::harness::{enumerate_solutions, Equation, DEFAULT_SEARCH_CAP};
use pp3_core::quadfield::{
    class_group, fundamental_unit, primes_above, splitting_type, torsion_generator, Element, Field, PrimeIdeal,
};
use pp3_core::sunits::{s_unit_basis, solve_cube_sum_with_cap, DEFAULT_WORK_CAP};
use pp3_core::Error;

pub const VERSION: &str = concat!("pp3 ", env!("CARGO_PKG_VERSION"));

#[derive(Parser, Debug)]
#[command(name = "pp3", version, about = "Exact computations for A x^p + B y^p = C z^3")]
struct Cli {
    /// Emit the structured report on stdout (summary goes to stderr).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct FieldArg {
    /// `Q`, `Q(sqrt D)` or `Q(sqrt(D))`.
    #[arg(long, default_value = "Q")]
    field: String,
}

#[derive(clap::Args, Debug, Clone)]
struct Coeffs {
    #[arg(long = "A", allow_hyphen_values = true, default_value = "1")]
    big_a: String,
    #[arg(long = "B", allow_hyphen_values = true, default_value = "1")]
    big_b: String,
    #[arg(long = "C", allow_hyphen_values = true, default_value = "1")]
    big_c: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Wk,
    Prop2,
    Overk,
    LocalQuad,
    LocalOdd,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basis, discriminant, units and small prime splittings.
    FieldInfo {
        #[command(flatten)]
        field: FieldArg,
    },
    /// Class group structure and its quotient by the primes above 3.
    ClassGroup {
        #[command(flatten)]
        field: FieldArg,
    },
    /// Classes of alpha + beta = gamma^3 with S the primes above 3 (and `--s-primes`).
    SunitSolve {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 4)]
        sunit_bound: u64,
        /// Extra rational primes whose prime ideals join S.
        #[arg(long, value_delimiter = ',')]
        s_primes: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_WORK_CAP)]
        work_cap: u64,
    },
    /// Frey curve invariants and local reduction data.
    Frey {
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        coeffs: Coeffs,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        p: u64,
    },
    /// Hypothesis checker for one of the theorems or local criteria.
    Check {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        coeffs: Coeffs,
        #[arg(long, default_value_t = 4)]
        sunit_bound: u64,
        /// Exponent bound for primes of S' not above 3.
        #[arg(long)]
        extra_prime_bound: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_WORK_CAP)]
        work_cap: u64,
        /// Defining polynomial for `local-odd`, e.g. `x^3 - 5`.
        #[arg(long)]
        poly: Option<String>,
        /// The prime q of `local-odd`.
        #[arg(long)]
        q: Option<u64>,
        /// User-supplied h_K for `local-odd`.
        #[arg(long)]
        h_k: Option<u64>,
        /// User-supplied h_{K(zeta_3)} for `local-odd`.
        #[arg(long)]
        h_kzeta3: Option<u64>,
        /// Declare A, B, C to be units times powers of 3 (`local-odd`).
        #[arg(long)]
        coeff_shape: bool,
    },
    /// Exhaustive search over a coordinate box.
    Search {
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        coeffs: Coeffs,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 10)]
        box_height: i64,
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        work_cap: u64,
    },
}

/// Structured output of one invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub field: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Value,
    pub ledger: Vec<String>,
    pub version: String,
}

impl Report {
    /// Canonical JSON: keys sorted at every level.
    pub fn to_canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serialises");
        serde_json::to_string_pretty(&v).expect("value serialises")
    }
}

/// Outcome of `run`: exit code and the two output streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::LimitExceeded(_) => 3,
        _ => 2,
    }
}

/// Runs the CLI on `args` (without the program name).
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("pp3".to_string()).chain(args.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json = cli.json;
    match dispatch(cli.command, &args) {
        Ok((report, summary, code)) => {
            if json {
                Outcome { code, stdout: report.to_canonical_json() + "\n", stderr: summary }
            } else {
                Outcome { code, stdout: summary, stderr: String::new() }
            }
        }
        Err(e) => Outcome { code: exit_code_for(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

type Dispatched = (Report, String, i32);

fn parse_field(f: &FieldArg) -> pp3_core::Result<Field> {
    f.field.parse()
}

fn parse_coeffs(field: Field, c: &Coeffs) -> pp3_core::Result<[Element; 3]> {
    Ok([
        Element::parse(field, &c.big_a)?,
        Element::parse(field, &c.big_b)?,
        Element::parse(field, &c.big_c)?,
    ])
}

fn report(args: &[String], field: Field, inputs: &[(&str, String)], results: Value, ledger: Vec<String>) -> Report {
    Report {
        command: args.to_vec(),
        field: field.to_string(),
        inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        results,
        ledger,
        version: VERSION.to_string(),
    }
}

fn primes_json(ps: &[PrimeIdeal]) -> Value {
    Value::Array(ps.iter().map(|p| json!(p.to_string())).collect())
}

fn dispatch(cmd: Command, args: &[String]) -> pp3_core::Result<Dispatched> {
    match cmd {
        Command::FieldInfo { field } => field_info(args, parse_field(&field)?),
        Command::ClassGroup { field } => class_group_cmd(args, parse_field(&field)?),
        Command::SunitSolve { field, sunit_bound, s_primes, work_cap } => {
            sunit_solve(args, parse_field(&field)?, sunit_bound, &s_primes, work_cap)
        }
        Command::Frey { field, coeffs, a, b, c, p } => {
            let k = parse_field(&field)?;
            let [ca, cb, cc] = parse_coeffs(k, &coeffs)?;
            let params = FreyParams::new(
                ca,
                cb,
                cc,
                Element::parse(k, &a)?,
                Element::parse(k, &b)?,
                Element::parse(k, &c)?,
                p,
            )?;
            frey_cmd(args, params)
        }
        Command::Check {
            theorem,
            field,
            coeffs,
            sunit_bound,
            extra_prime_bound,
            work_cap,
            poly,
            q,
            h_k,
            h_kzeta3,
            coeff_shape,
        } => {
            let cfg = CheckConfig { sunit_bound, extra_prime_bound, work_cap, exclude_degenerate: false };
            if theorem == Theorem::LocalOdd {
                let missing = |what: &str| Error::Parse(format!("local-odd needs --{what}"));
                let f: IntPolynomial = poly.ok_or_else(|| missing("poly"))?.parse()?;
                let inp = OddDegreeInputs {
                    f,
                    q: q.ok_or_else(|| missing("q"))?,
                    h_k: h_k.ok_or_else(|| missing("h-k"))?,
                    h_kzeta3: h_kzeta3.ok_or_else(|| missing("h-kzeta3"))?,
                    coeffs_unit_times_three_power: coeff_shape,
                };
                let v = check_local_odd_degree(&inp)?;
                let inputs = [
                    ("poly", inp.f.to_string()),
                    ("q", inp.q.to_string()),
                    ("h_k", inp.h_k.to_string()),
                    ("h_kzeta3", inp.h_kzeta3.to_string()),
                    ("coeff_shape", inp.coeffs_unit_times_three_power.to_string()),
                ];
                return Ok(verdict_report(args, Field::rational(), &inputs, v));
            }
            let k = parse_field(&field)?;
            let [a, b, c] = parse_coeffs(k, &coeffs)?;
            let v = match theorem {
                Theorem::Wk => check_theorem_wk(k, &a, &b, &c, &cfg)?,
                Theorem::Prop2 => check_prop_main2(k, &a, &b, &c, &cfg)?,
                Theorem::Overk => check_theorem_k(k, &a, &b, &c, &cfg)?,
                Theorem::LocalQuad => check_local_quadratic(k, &a, &b, &c)?,
                Theorem::LocalOdd => unreachable!(),
            };
            let inputs = [
                ("A", a.to_string()),
                ("B", b.to_string()),
                ("C", c.to_string()),
                ("sunit_bound", sunit_bound.to_string()),
            ];
            Ok(verdict_report(args, k, &inputs, v))
        }
        Command::Search { field, coeffs, p, box_height, work_cap } => {
            let k = parse_field(&field)?;
            let [a, b, c] = parse_coeffs(k, &coeffs)?;
            search_cmd(args, Equation::new(a, b, c, p)?, box_height, work_cap)
        }
    }
}

fn field_info(args: &[String], k: Field) -> pp3_core::Result<Dispatched> {
    let (zeta, w) = torsion_generator(k);
    let unit = if k.is_real_quadratic() { Some(fundamental_unit(k)?.to_string()) } else { None };
    let mut splittings = serde_json::Map::new();
    for p in [2u64, 3, 5, 7] {
        let s = splitting_type(k, p)?;
        splittings.insert(p.to_string(), json!({ "type": s.label(), "primes": primes_json(&s.primes()) }));
    }
    let results = json!({
        "d": k.d(),
        "degree": k.degree(),
        "discriminant": k.discriminant(),
        "basis": k.basis_description(),
        "totally_real": k.is_totally_real(),
        "torsion": { "generator": zeta.to_string(), "order": w },
        "fundamental_unit": unit,
        "splitting": Value::Object(splittings),
    });
    let mut s = String::new();
    let _ = writeln!(s, "field {k}: degree {}, discriminant {}, basis {}", k.degree(), k.discriminant(), k.basis_description());
    let _ = writeln!(s, "torsion generator {zeta} of order {w}");
    if let Some(u) = results["fundamental_unit"].as_str() {
        let _ = writeln!(s, "fundamental unit {u}");
    }
    Ok((report(args, k, &[], results, Vec::new()), s, 0))
}

fn class_group_cmd(args: &[String], k: Field) -> pp3_core::Result<Dispatched> {
    let cl = class_group(k)?;
    let st = cl.structure();
    let sk = s_k(k)?;
    let quo = cl.quotient_by(&sk);
    let results = json!({
        "h": cl.h(),
        "invariants": st.invariants,
        "generators": st.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "has_3_torsion": st.has_3_torsion(),
        "s_k": primes_json(&sk),
        "quotient_by_s_k": { "invariants": quo.quotient.invariants, "h": quo.quotient.h, "has_3_torsion": quo.has_3_torsion },
    });
    let s = format!("class group of {k}: h = {}, invariants {:?}\n", cl.h(), st.invariants);
    Ok((report(args, k, &[], results, Vec::new()), s, 0))
}

fn sunit_solve(args: &[String], k: Field, bound: u64, extra: &[u64], cap: u64) -> pp3_core::Result<Dispatched> {
    let mut s_set = primes_above(k, 3)?;
    for &p in extra {
        s_set.extend(primes_above(k, p)?);
    }
    let basis = s_unit_basis(k, &s_set)?;
    let sols = solve_cube_sum_with_cap(&basis, bound, cap)?;
    let classes: Vec<Value> = sols
        .solutions
        .iter()
        .map(|t| {
            let vals: BTreeMap<String, Value> = basis
                .primes()
                .iter()
                .map(|p| {
                    let g = p.valuation(&t.gamma);
                    (p.to_string(), json!({ "alpha": p.valuation(&t.alpha), "beta": p.valuation(&t.beta), "gamma": g }))
                })
                .collect();
            json!({
                "alpha": t.alpha.to_string(),
                "beta": t.beta.to_string(),
                "gamma": t.gamma.to_string(),
                "alpha_exps": t.alpha_exps,
                "beta_exps": t.beta_exps,
                "valuations": vals,
            })
        })
        .collect();
    let results = json!({
        "basis": basis.labels(),
        "s": primes_json(basis.primes()),
        "bound": sols.bound,
        "bounded_search": sols.bounded_search,
        "classes": classes,
    });
    let mut s = format!("{} classes of alpha + beta = gamma^3 at exponent bound {bound}\n", sols.solutions.len());
    for t in &sols.solutions {
        let _ = writeln!(s, "  ({}, {}, {})", t.alpha, t.beta, t.gamma);
    }
    let ledger = vec![format!("completeness only within exponent bound {bound}")];
    Ok((report(args, k, &[("sunit_bound", bound.to_string())], results, ledger), s, 0))
}

fn verdict_row(v: &ReductionVerdict) -> Value {
    json!({
        "prime": v.prime.to_string(),
        "kind": format!("{:?}", v.kind),
        "inertia_claim": format!("{:?}", v.inertia_claim),
        "v_delta": v.v_delta.to_string(),
        "v_j": v.v_j.to_string(),
    })
}

fn frey_cmd(args: &[String], params: FreyParams) -> pp3_core::Result<Dispatched> {
    let k = params.field();
    let w = frey_model(&params)?;
    let mu = mu_of(&params)?;
    let j_mu = j_from_mu(&mu)?;
    let sp = s_prime(k, &params.big_a, &params.big_b, &params.big_c)?;
    let mut rows = Vec::new();
    let norm = w.delta.norm();
    for q in pp3_core::algebra::arith::prime_divisors(norm.numer())? {
        for pr in primes_above(k, q)? {
            if sp.contains(&pr) {
                continue;
            }
            rows.push(match classify_away_from_sprime(&params, &pr) {
                Ok(v) => verdict_row(&v),
                Err(e) => json!({ "prime": pr.to_string(), "error": e.to_string() }),
            });
        }
    }
    let bounds: BTreeMap<String, i64> = sp.iter().map(|p| (p.to_string(), conductor_exponent_bound(p))).collect();
    let at3: Vec<Value> = s_k(k)?
        .iter()
        .map(|p| match classify_at_3_over_k(&params, p) {
            Ok(v) => verdict_row(&v),
            Err(e) => json!({ "prime": p.to_string(), "error": e.to_string() }),
        })
        .collect();
    let results = json!({
        "a1": w.a1.to_string(),
        "a3": w.a3.to_string(),
        "b2": w.b2.to_string(),
        "b4": w.b4.to_string(),
        "b6": w.b6.to_string(),
        "b8": w.b8.to_string(),
        "c4": w.c4.to_string(),
        "c6": w.c6.to_string(),
        "delta": w.delta.to_string(),
        "j": w.j.to_string(),
        "mu": mu.to_string(),
        "j_from_mu": j_mu.to_string(),
        "reduction_away_from_s_prime": rows,
        "conductor_exponent_bounds": bounds,
        "reduction_at_3": at3,
    });
    let inputs = [
        ("A", params.big_a.to_string()),
        ("B", params.big_b.to_string()),
        ("C", params.big_c.to_string()),
        ("a", params.a.to_string()),
        ("b", params.b.to_string()),
        ("c", params.c.to_string()),
        ("p", params.p.to_string()),
    ];
    let s = format!("Frey curve over {k}: c4 = {}, c6 = {}, Delta = {}, j = {}\n", w.c4, w.c6, w.delta, w.j);
    Ok((report(args, k, &inputs, results, Vec::new()), s, 0))
}

fn verdict_report(args: &[String], k: Field, inputs: &[(&str, String)], v: Verdict) -> Dispatched {
    let clauses: Vec<Value> = v
        .clauses
        .iter()
        .map(|c| json!({ "name": c.name, "status": c.status.as_str(), "detail": c.detail }))
        .collect();
    let witness = v.witness.as_ref().map(|(a, b, g)| json!({ "alpha": a, "beta": b, "gamma": g }));
    let results = json!({
        "theorem": v.theorem,
        "overall": v.overall.to_string(),
        "explicit_p_bound": v.explicit_p_bound,
        "clauses": clauses,
        "witness": witness,
    });
    let mut s = format!("{}: {}\n", v.theorem, v.overall);
    for c in &v.clauses {
        let _ = writeln!(s, "  [{}] {}: {}", c.status.as_str(), c.name, c.detail);
    }
    if let Some((a, b, g)) = &v.witness {
        let _ = writeln!(s, "  witness: ({a}, {b}, {g})");
    }
    let code = if v.overall == Overall::DoesNotApply { 1 } else { 0 };
    (report(args, k, inputs, results, v.ledger.clone()), s, code)
}

fn search_cmd(args: &[String], eq: Equation, h: i64, cap: u64) -> pp3_core::Result<Dispatched> {
    let recs = enumerate_solutions(&eq, h, cap)?;
    let rows: Vec<Value> = recs
        .iter()
        .map(|r| {
            json!({
                "a": r.a.to_string(),
                "b": r.b.to_string(),
                "c": r.c.to_string(),
                "trivial": r.trivial,
                "primitive": r.primitive,
                "in_w_k": r.in_w_k,
                "in_exceptional_s": r.in_exceptional_s,
            })
        })
        .collect();
    let nontrivial_primitive = recs.iter().filter(|r| r.primitive && !r.trivial).count();
    let results = json!({
        "box_height": h,
        "records": rows,
        "count": recs.len(),
        "nontrivial_primitive": nontrivial_primitive,
    });
    let inputs = [
        ("A", eq.big_a.to_string()),
        ("B", eq.big_b.to_string()),
        ("C", eq.big_c.to_string()),
        ("p", eq.p.to_string()),
        ("box_height", h.to_string()),
    ];
    let s = format!(
        "{} solutions in the box of height {h}, {nontrivial_primitive} nontrivial primitive\n",
        recs.len()
    );
    Ok((report(args, eq.field, &inputs, results, vec![format!("complete only within the box of height {h}")]), s, 0))
}
