use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::quadfield::{
    class_group, fundamental_unit, is_principal, torsion_generator, Element, Field, Form, Ideal,
    PrimeIdeal,
};

/// Generators of the S-unit group: a root of unity of order `w`, the
/// fundamental unit (real fields), and for each prime of `S` a generator of a
/// principal product of the S-primes.
///
/// Exponent vectors are laid out as `[t, k, m_1, ..., m_s]` where `t` is taken
/// mod `w` and `k` is absent for fields without a fundamental unit.
#[derive(Clone, Debug)]
pub struct SUnitBasis {
    field: Field,
    primes: Vec<PrimeIdeal>,
    torsion: Element,
    w: u32,
    unit: Option<Element>,
    /// Lower triangular, positive diagonal, `0 <= rows[i][j] < rows[j][j]`:
    /// `gens[i]` generates `prod_j P_j^rows[i][j]`.
    rows: Vec<Vec<i64>>,
    gens: Vec<Element>,
}

pub fn s_unit_basis(field: Field, s: &[PrimeIdeal]) -> Result<SUnitBasis> {
    let (torsion, w) = torsion_generator(field);
    let unit = if field.is_real_quadratic() { Some(fundamental_unit(field)?) } else { None };
    let mut primes: Vec<PrimeIdeal> = s.to_vec();
    primes.sort();
    primes.dedup();
    let (rows, gens) = if field.is_rational() {
        let rows = (0..primes.len())
            .map(|i| (0..=i).map(|j| i64::from(i == j)).collect())
            .collect();
        let gens = primes.iter().map(|p| Element::from_int(field, p.p())).collect();
        (rows, gens)
    } else {
        relation_rows(field, &primes)?
    };
    Ok(SUnitBasis { field, primes, torsion, w, unit, rows, gens })
}

fn relation_rows(field: Field, primes: &[PrimeIdeal]) -> Result<(Vec<Vec<i64>>, Vec<Element>)> {
    let cl = class_group(field)?;
    let classes: Vec<Form> = primes.iter().map(|p| cl.class_of_prime(p)).collect();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut gens = Vec::new();
    // span of the classes seen so far, with non-negative exponents
    let mut span: HashMap<Form, Vec<i64>> = HashMap::from([(cl.identity().clone(), Vec::new())]);
    for (i, c) in classes.iter().enumerate() {
        let mut power = c.clone();
        let mut r = 1i64;
        let mut row = loop {
            if let Some(t) = span.get(&cl.inverse(&power)) {
                let mut row = t.clone();
                row.push(r);
                break row;
            }
            power = cl.mul(&power, c);
            r += 1;
        };
        for j in (0..i).rev() {
            let q = row[j].div_euclid(rows[j][j]);
            if q != 0 {
                for (k, v) in rows[j].iter().enumerate() {
                    row[k] -= q * v;
                }
            }
        }
        let mut ideal = Ideal::unit(field);
        for (j, &e) in row.iter().enumerate() {
            ideal = ideal.mul(&primes[j].ideal().pow(e as u32));
        }
        let g = is_principal(field, &ideal)?.ok_or_else(|| {
            Error::ConsistencyViolated(format!("{ideal} expected principal"))
        })?;
        let mut next = HashMap::new();
        for (cls, ex) in &span {
            let mut z = cls.clone();
            for e in 0..r {
                let mut v = ex.clone();
                v.push(e);
                next.entry(z.clone()).or_insert(v);
                z = cl.mul(&z, c);
            }
        }
        span = next;
        rows.push(row);
        gens.push(g);
    }
    Ok((rows, gens))
}

impl SUnitBasis {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn primes(&self) -> &[PrimeIdeal] {
        &self.primes
    }

    pub fn torsion(&self) -> (&Element, u32) {
        (&self.torsion, self.w)
    }

    pub fn fundamental_unit(&self) -> Option<&Element> {
        self.unit.as_ref()
    }

    pub fn prime_generators(&self) -> &[Element] {
        &self.gens
    }

    pub fn relation_rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Number of free (non-torsion) exponents.
    pub fn rank(&self) -> usize {
        self.unit.iter().count() + self.gens.len()
    }

    /// Free generators, in exponent-vector order.
    pub fn free_generators(&self) -> Vec<Element> {
        self.unit.iter().cloned().chain(self.gens.iter().cloned()).collect()
    }

    /// All generators with the torsion generator first.
    pub fn generators(&self) -> Vec<Element> {
        std::iter::once(self.torsion.clone()).chain(self.free_generators()).collect()
    }

    pub fn element(&self, exps: &[i64]) -> Element {
        assert_eq!(exps.len(), self.rank() + 1);
        let mut acc = self.torsion.pow(exps[0].rem_euclid(self.w as i64) as u64);
        for (g, &e) in self.free_generators().iter().zip(&exps[1..]) {
            acc = &acc * &g.powi(e).expect("generators are nonzero");
        }
        acc
    }

    /// Exponent vector of `x`, or `None` when `x` is not an S-unit.
    pub fn exponents(&self, x: &Element) -> Option<Vec<i64>> {
        if x.is_zero() {
            return None;
        }
        let mut v: Vec<i64> = self.primes.iter().map(|p| p.valuation(x).unwrap()).collect();
        let s = self.primes.len();
        let mut m = vec![0i64; s];
        for k in (0..s).rev() {
            let diag = self.rows[k][k];
            if v[k] % diag != 0 {
                return None;
            }
            m[k] = v[k] / diag;
            for (j, r) in self.rows[k].iter().enumerate() {
                v[j] -= m[k] * r;
            }
        }
        let mut y = x.clone();
        for (g, &e) in self.gens.iter().zip(&m) {
            y = &y * &g.powi(-e).ok()?;
        }
        if !y.is_integral() || !y.norm().abs().is_one() {
            return None;
        }
        let mut k = 0i64;
        if let Some(eps) = &self.unit {
            let inv = eps.inv().ok()?;
            while y.abs_cmp(eps) != Ordering::Less {
                y = &y * &inv;
                k += 1;
            }
            let one = Element::one(self.field);
            while y.abs_cmp(&one) == Ordering::Less {
                y = &y * eps;
                k -= 1;
            }
        }
        let mut z = Element::one(self.field);
        let mut t = None;
        for j in 0..self.w {
            if z == y {
                t = Some(j as i64);
                break;
            }
            z = &z * &self.torsion;
        }
        let mut out = vec![t?];
        if self.unit.is_some() {
            out.push(k);
        }
        out.extend(m);
        Some(out)
    }

    /// Short labels `[zeta, eps, pi_1, ...]` for reports.
    pub fn labels(&self) -> Vec<String> {
        let mut out = vec![self.torsion.to_string()];
        if let Some(e) = &self.unit {
            out.push(e.to_string());
        }
        out.extend(self.gens.iter().map(|g| g.to_string()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::{make_field, primes_above};

    #[test]
    fn rational_basis() {
        let q = Field::rational();
        let b = s_unit_basis(q, &primes_above(q, 3).unwrap()).unwrap();
        assert_eq!(b.labels(), vec!["-1", "3"]);
        let x = Element::new(q, num_rational::BigRational::new((-27).into(), 2.into()), num_rational::BigRational::from_integer(0.into()));
        assert_eq!(b.exponents(&x), None);
        assert_eq!(b.exponents(&Element::from_int(q, -243)), Some(vec![1, 5]));
    }

    #[test]
    fn sqrt2_basis() {
        let k = make_field(2).unwrap();
        let b = s_unit_basis(k, &primes_above(k, 3).unwrap()).unwrap();
        assert_eq!(b.labels(), vec!["-1", "1 + w", "3"]);
        let exps = vec![1, -3, 2];
        assert_eq!(b.exponents(&b.element(&exps)), Some(exps));
        assert_eq!(b.exponents(&Element::from_ints(k, 3, 1)), None); // norm 7
    }

    #[test]
    fn class_order_two() {
        let k = make_field(-6).unwrap();
        let p2 = primes_above(k, 2).unwrap();
        let b = s_unit_basis(k, &p2).unwrap();
        assert_eq!(b.relation_rows(), &[vec![2]]);
        assert_eq!(b.prime_generators()[0].norm(), num_rational::BigRational::from_integer(4.into()));
        assert_eq!(b.exponents(&Element::from_int(k, -2)), Some(vec![1, 1]));
    }

    #[test]
    fn dependent_split_primes() {
        // in Q(sqrt -5) both primes over 3 have order 2 and their product is (3)
        let k = make_field(-5).unwrap();
        let b = s_unit_basis(k, &primes_above(k, 3).unwrap()).unwrap();
        assert_eq!(b.relation_rows(), &[vec![2], vec![1, 1]]);
        let x = Element::from_ints(k, 2, 1); // norm 9
        let e = b.exponents(&x).unwrap();
        assert_eq!(b.element(&e), x);
    }
}
