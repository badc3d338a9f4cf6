//! Structure of finite abelian groups given by an element list and a law.

use std::collections::HashMap;
use std::hash::Hash;

use crate::algebra::arith::factor_u64;

/// Order of `x`, by repeated multiplication.
pub fn element_order<E, F>(x: &E, identity: &E, mul: &F) -> u64
where
    E: Clone + Eq,
    F: Fn(&E, &E) -> E,
{
    let mut y = x.clone();
    let mut n = 1;
    while &y != identity {
        y = mul(&y, x);
        n += 1;
    }
    n
}

fn power<E: Clone, F: Fn(&E, &E) -> E>(x: &E, mut e: u64, identity: &E, mul: &F) -> E {
    let mut acc = identity.clone();
    let mut base = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    acc
}

/// Invariant factors `d_1 | d_2 | ... ` (all > 1) of the group formed by
/// `elements`, each paired with a generator of exactly that order; the
/// generators give a direct-sum decomposition.
pub fn abelian_structure<E, F>(elements: &[E], identity: &E, mul: F) -> Vec<(u64, E)>
where
    E: Clone + Eq + Hash + Ord,
    F: Fn(&E, &E) -> E,
{
    let h = elements.len() as u64;
    let mut sorted: Vec<E> = elements.to_vec();
    sorted.sort();
    // per prime: cyclic factors (order, generator), largest first
    let mut parts: Vec<Vec<(u64, E)>> = Vec::new();
    for (l, k) in factor_u64(h) {
        let lk = l.pow(k);
        let cofactor = h / lk;
        let mut sylow: Vec<E> = sorted
            .iter()
            .map(|x| power(x, cofactor, identity, &mul))
            .collect();
        sylow.sort();
        sylow.dedup();
        let mut gens: Vec<(u64, E)> = Vec::new();
        // dlog table of the span of gens
        let mut span: HashMap<E, Vec<u64>> = HashMap::from([(identity.clone(), Vec::new())]);
        while (span.len() as u64) < lk {
            // element of largest order modulo the span
            let mut best: Option<(u64, &E)> = None;
            for x in &sylow {
                let mut y = x.clone();
                let mut m = 1;
                while !span.contains_key(&y) {
                    y = mul(&y, x);
                    m += 1;
                }
                if best.is_none_or(|(bm, _)| m > bm) {
                    best = Some((m, x));
                }
            }
            let (m, x) = best.expect("nonempty");
            let xm = power(x, m, identity, &mul);
            let t = span[&xm].clone();
            let mut lifted = x.clone();
            for ((ord, g), ti) in gens.iter().zip(&t) {
                debug_assert_eq!(ti % m, 0);
                let back = (ord - (ti / m) % ord) % ord;
                lifted = mul(&lifted, &power(g, back, identity, &mul));
            }
            let mut next = HashMap::with_capacity(span.len() * m as usize);
            for (y, ex) in &span {
                let mut z = y.clone();
                for j in 0..m {
                    let mut e = ex.clone();
                    e.push(j);
                    next.insert(z.clone(), e);
                    z = mul(&z, &lifted);
                }
            }
            span = next;
            gens.push((m, lifted));
        }
        parts.push(gens);
    }
    let rank = parts.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut d = 1;
        let mut g = identity.clone();
        for part in &parts {
            if let Some((o, x)) = part.get(i) {
                d *= o;
                g = mul(&g, x);
            }
        }
        out.push((d, g));
    }
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_product(mods: &[u64]) -> (Vec<Vec<u64>>, impl Fn(&Vec<u64>, &Vec<u64>) -> Vec<u64> + '_) {
        let mut elems = vec![vec![]];
        for &m in mods {
            elems = elems
                .into_iter()
                .flat_map(|e: Vec<u64>| {
                    (0..m).map(move |j| {
                        let mut f = e.clone();
                        f.push(j);
                        f
                    })
                })
                .collect();
        }
        let mul = move |a: &Vec<u64>, b: &Vec<u64>| -> Vec<u64> {
            a.iter().zip(b).zip(mods).map(|((x, y), m)| (x + y) % m).collect()
        };
        (elems, mul)
    }

    #[test]
    fn invariant_factors() {
        for (mods, expect) in [
            (vec![6], vec![6]),
            (vec![2, 3], vec![6]),
            (vec![2, 4], vec![2, 4]),
            (vec![4, 6], vec![2, 12]),
            (vec![3, 3, 9], vec![3, 3, 9]),
            (vec![1], vec![]),
        ] {
            let (elems, mul) = zn_product(&mods);
            let id = vec![0; mods.len()];
            let st = abelian_structure(&elems, &id, &mul);
            let ds: Vec<u64> = st.iter().map(|(d, _)| *d).collect();
            assert_eq!(ds, expect, "{mods:?}");
            for (d, g) in &st {
                assert_eq!(element_order(g, &id, &mul), *d);
            }
        }
    }
}
