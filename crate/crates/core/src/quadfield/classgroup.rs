//! Class groups via reduced binary quadratic forms.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive};

use super::group::{abelian_structure, element_order};
use super::{make_field, Field, Form, Ideal, PrimeIdeal};
use crate::algebra::arith::squarefree_part;
use crate::error::{Error, Result};

pub const DEFAULT_DISC_LIMIT: u64 = 1_000_000;

/// The (wide) ideal class group, elements represented by canonical reduced forms.
#[derive(Clone, Debug)]
pub struct ClassGroup {
    field: Field,
    disc: BigInt,
    elements: Vec<Form>,
    /// reduced form -> canonical representative of its class
    canon: HashMap<Form, Form>,
    identity: Form,
}

/// Invariant factors with generators of exactly those orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroupData {
    pub invariants: Vec<u64>,
    pub generators: Vec<Ideal>,
    pub h: u64,
}

impl ClassGroupData {
    pub fn has_3_torsion(&self) -> bool {
        self.invariants.iter().any(|d| d % 3 == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SClassGroupData {
    /// Structure of `Cl(K)/<[P] : P in S>`.
    pub quotient: ClassGroupData,
    pub has_3_torsion: bool,
    pub h_full: u64,
}

pub fn class_group(field: Field) -> Result<ClassGroup> {
    class_group_with_limit(field, DEFAULT_DISC_LIMIT)
}

pub fn class_group_with_limit(field: Field, limit: u64) -> Result<ClassGroup> {
    let disc = BigInt::from(field.discriminant());
    if field.is_rational() {
        let id = Form::principal(&disc);
        return Ok(ClassGroup {
            field,
            disc,
            elements: vec![id.clone()],
            canon: HashMap::from([(id.clone(), id.clone())]),
            identity: id,
        });
    }
    if disc.abs() > BigInt::from(limit) {
        return Err(Error::LimitExceeded(format!(
            "|disc| = {} above class group limit {limit}",
            disc.abs()
        )));
    }
    let reduced = reduced_forms(&disc);
    let mut canon = HashMap::new();
    if disc.is_negative() {
        for f in &reduced {
            canon.insert(f.clone(), f.clone());
        }
    } else {
        for f in &reduced {
            if canon.contains_key(f) {
                continue;
            }
            let mut class = f.cycle();
            let neg = f.negate();
            if !class.contains(&neg) {
                class.extend(neg.cycle());
            }
            let rep = class.iter().min().expect("nonempty").clone();
            for g in class {
                canon.insert(g, rep.clone());
            }
        }
    }
    let identity = canon[&reduce(&Form::principal(&disc))].clone();
    let elements: BTreeSet<Form> = canon.values().cloned().collect();
    Ok(ClassGroup { field, disc, elements: elements.into_iter().collect(), canon, identity })
}

fn reduce(f: &Form) -> Form {
    if f.disc().is_negative() {
        f.reduce_definite()
    } else {
        f.reduce_indefinite()
    }
}

/// All primitive reduced forms of discriminant `disc` (positive definite
/// ones when `disc < 0`).
pub fn reduced_forms(disc: &BigInt) -> Vec<Form> {
    let mut out = Vec::new();
    let d = disc.to_i64().expect("desk-scale discriminant");
    let parity = d.rem_euclid(2);
    if d < 0 {
        let mut a = 1i64;
        while 3 * a * a <= -d {
            for b in -a + 1..=a {
                if b.rem_euclid(2) != parity {
                    continue;
                }
                let num = b * b - d;
                if num % (4 * a) != 0 {
                    continue;
                }
                let c = num / (4 * a);
                if c < a || (b < 0 && a == c) {
                    continue;
                }
                let f = Form::new(a, b, c);
                if f.is_primitive() {
                    out.push(f);
                }
            }
            a += 1;
        }
    } else {
        let s = d.sqrt();
        for b in 1..=s {
            if b.rem_euclid(2) != parity {
                continue;
            }
            let num = b * b - d;
            let lo = (s + 1 - b + 1) / 2;
            let hi = (s + b) / 2;
            for a in lo.max(1)..=hi {
                if num % (4 * a) != 0 {
                    continue;
                }
                let c = num / (4 * a);
                for f in [Form::new(a, b, c), Form::new(-a, b, -c)] {
                    if f.is_primitive() && f.is_reduced_indefinite() {
                        out.push(f);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

impl ClassGroup {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn h(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[Form] {
        &self.elements
    }

    pub fn identity(&self) -> &Form {
        &self.identity
    }

    /// Canonical representative of the class of a form of the right discriminant.
    pub fn canonical(&self, f: &Form) -> Form {
        debug_assert_eq!(f.disc(), self.disc);
        if self.field.is_rational() {
            return self.identity.clone();
        }
        self.canon[&reduce(f)].clone()
    }

    pub fn class_of_ideal(&self, i: &Ideal) -> Form {
        if self.field.is_rational() {
            return self.identity.clone();
        }
        self.canonical(&Form::from_ideal(i))
    }

    pub fn class_of_prime(&self, p: &PrimeIdeal) -> Form {
        self.class_of_ideal(&p.ideal())
    }

    /// Group law through ideal multiplication.
    pub fn mul(&self, f: &Form, g: &Form) -> Form {
        if self.field.is_rational() {
            return self.identity.clone();
        }
        let i = f.to_ideal(self.field).mul(&g.to_ideal(self.field));
        self.class_of_ideal(&i)
    }

    pub fn inverse(&self, f: &Form) -> Form {
        if self.field.is_rational() {
            return self.identity.clone();
        }
        self.canonical(&f.inverse())
    }

    pub fn pow(&self, f: &Form, e: u64) -> Form {
        (0..e).fold(self.identity.clone(), |acc, _| self.mul(&acc, f))
    }

    pub fn order(&self, f: &Form) -> u64 {
        element_order(f, &self.identity, &|x: &Form, y: &Form| self.mul(x, y))
    }

    pub fn structure(&self) -> ClassGroupData {
        let st = abelian_structure(&self.elements, &self.identity, |x, y| self.mul(x, y));
        self.data(st, self.h())
    }

    fn data(&self, st: Vec<(u64, Form)>, h: u64) -> ClassGroupData {
        ClassGroupData {
            invariants: st.iter().map(|(d, _)| *d).collect(),
            generators: st.iter().map(|(_, f)| f.to_ideal(self.field)).collect(),
            h,
        }
    }

    /// Classes of the subgroup generated by `gens`.
    pub fn span(&self, gens: &[Form]) -> BTreeSet<Form> {
        let mut span = BTreeSet::from([self.identity.clone()]);
        for g in gens {
            let mut frontier: Vec<Form> = span.iter().cloned().collect();
            while let Some(x) = frontier.pop() {
                let y = self.mul(&x, g);
                if span.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        span
    }

    /// Structure of the quotient by the classes of the given primes.
    pub fn quotient_by(&self, primes: &[PrimeIdeal]) -> SClassGroupData {
        let gens: Vec<Form> = primes.iter().map(|p| self.class_of_prime(p)).collect();
        let sub: Vec<Form> = self.span(&gens).into_iter().collect();
        let coset_rep = |x: &Form| -> Form {
            sub.iter().map(|n| self.mul(x, n)).min().expect("nonempty")
        };
        let reps: BTreeSet<Form> = self.elements.iter().map(coset_rep).collect();
        let reps: Vec<Form> = reps.into_iter().collect();
        let id = coset_rep(&self.identity);
        let st = abelian_structure(&reps, &id, |x, y| coset_rep(&self.mul(x, y)));
        let quotient = self.data(st, reps.len() as u64);
        SClassGroupData {
            has_3_torsion: quotient.has_3_torsion(),
            quotient,
            h_full: self.h(),
        }
    }
}

pub fn s_class_group(field: Field, s: &[PrimeIdeal]) -> Result<SClassGroupData> {
    Ok(class_group(field)?.quotient_by(s))
}

/// 3-divisibility of the class number of `K(zeta_3) = Q(sqrt d, sqrt -3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KZeta3Report {
    pub divisible: bool,
    pub h_k: u64,
    /// Square-free `d'` with `Q(sqrt d') = Q(sqrt -3d)`.
    pub d_minus3d: i64,
    pub h_minus3d: u64,
    pub reduction: String,
}

pub fn h3_divisibility_of_kzeta3(field: Field) -> Result<KZeta3Report> {
    if field.is_rational() {
        return Ok(KZeta3Report {
            divisible: false,
            h_k: 1,
            d_minus3d: -3,
            h_minus3d: 1,
            reduction: "K(zeta_3) = Q(sqrt -3), class number 1".into(),
        });
    }
    let d = field.d();
    let h_k = class_group(field)?.h();
    let dp = squarefree_part(-3 * d);
    let h_m = class_group(make_field(dp)?)?.h();
    Ok(KZeta3Report {
        divisible: (h_k * h_m) % 3 == 0,
        h_k,
        d_minus3d: dp,
        h_minus3d: h_m,
        reduction: format!(
            "biquadratic Q(sqrt {d}, sqrt -3): h = q*h({d})*h(-3)*h({dp})/4 with q in {{1,2,4}}, h(-3) = 1; \
             3 | h iff 3 | {h_k}*{h_m}"
        ),
    })
}

impl Ideal {
    /// Convenience: whether this ideal's class is trivial in `cl`.
    pub fn class_is_trivial(&self, cl: &ClassGroup) -> bool {
        cl.class_of_ideal(self) == *cl.identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(d: i64) -> u64 {
        class_group(make_field(d).unwrap()).unwrap().h()
    }

    #[test]
    fn class_numbers() {
        assert_eq!(h(2), 1);
        assert_eq!(h(5), 1);
        assert_eq!(h(-6), 2);
        assert_eq!(h(-15), 2);
        assert_eq!(h(-87), 6);
        assert_eq!(h(10), 2);
        assert_eq!(h(79), 3);
        assert_eq!(h(-23), 3);
        assert_eq!(h(-1), 1);
        assert_eq!(h(-3), 1);
    }

    #[test]
    fn structures() {
        let cl = class_group(make_field(-87).unwrap()).unwrap();
        assert_eq!(cl.structure().invariants, vec![6]);
        let cl = class_group(make_field(-21).unwrap()).unwrap();
        assert_eq!(cl.structure().invariants, vec![2, 2]);
    }

    #[test]
    fn kzeta3() {
        let r = h3_divisibility_of_kzeta3(make_field(2).unwrap()).unwrap();
        assert!(!r.divisible);
        assert_eq!((r.h_k, r.d_minus3d, r.h_minus3d), (1, -6, 2));
        let r = h3_divisibility_of_kzeta3(make_field(5).unwrap()).unwrap();
        assert_eq!((r.divisible, r.h_minus3d), (false, 2));
        let r = h3_divisibility_of_kzeta3(make_field(29).unwrap()).unwrap();
        assert_eq!((r.divisible, r.h_k, r.h_minus3d), (true, 1, 6));
    }
}
