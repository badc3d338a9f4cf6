//! Independent oracles: naive form counting, analytic class number
//! formulas, and brute-force S-unit enumeration.

use std::f64::consts::PI;

use pp3_core::harness::brute_sunit_box;
use pp3_core::quadfield::{class_group, Field, h3_divisibility_of_kzeta3, make_field, primes_above};
use pp3_core::sunits::{s_unit_basis, solve_cube_sum};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Reduced primitive positive definite forms of discriminant `disc < 0`,
/// counted straight from the definition.
fn naive_definite_count(disc: i64) -> u64 {
    let mut n = 0;
    let amax = ((-disc) as f64 / 3.0).sqrt() as i64 + 1;
    for a in 1..=amax {
        for b in -a..=a {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || gcd(gcd(a, b), c) != 1 {
                continue;
            }
            if b < 0 && (-b == a || a == c) {
                continue;
            }
            n += 1;
        }
    }
    n
}

fn kronecker(d: i64, n: i64) -> i64 {
    // n > 0
    let mut n = n;
    let mut r = 1;
    while n % 2 == 0 {
        n /= 2;
        r *= match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    // Jacobi symbol (d / n) for odd n
    let mut a = d.rem_euclid(n);
    let mut m = n;
    let mut j = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if m % 8 == 3 || m % 8 == 5 {
                j = -j;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            j = -j;
        }
        a %= m;
    }
    r * if m == 1 { j } else { 0 }
}

fn field_disc(d: i64) -> i64 {
    if d.rem_euclid(4) == 1 {
        d
    } else {
        4 * d
    }
}

/// Dirichlet's formula for `D < -4`: `h = -(1/|D|) sum chi(a) a`.
fn analytic_h_imaginary(disc: i64) -> i64 {
    let n = -disc;
    let s: i64 = (1..n).map(|a| kronecker(disc, a) * a).sum();
    -s / n
}

/// `h log eps = -(1/2) sum_{a < D} chi(a) log sin(pi a / D)`, with `eps`
/// found by searching `t^2 - D u^2 = +-4`.
fn analytic_h_real(disc: i64) -> i64 {
    let mut eps = 0.0;
    for u in 1i64.. {
        let t2 = disc * u * u;
        let found = [t2 - 4, t2 + 4].into_iter().find_map(|x| {
            let t = (x as f64).sqrt().round() as i64;
            (t * t == x).then_some(t)
        });
        if let Some(t) = found {
            eps = (t as f64 + u as f64 * (disc as f64).sqrt()) / 2.0;
            break;
        }
    }
    let s: f64 = (1..disc).map(|a| kronecker(disc, a) as f64 * (PI * a as f64 / disc as f64).sin().ln()).sum();
    (-0.5 * s / eps.ln()).round() as i64
}

#[test]
fn class_numbers_match_independent_oracles() {
    for (d, h) in [(2, 1), (5, 1), (-6, 2), (-15, 2), (-87, 6), (-23, 3), (-5, 2), (10, 2), (79, 3), (229, 3)] {
        let k = make_field(d).unwrap();
        let got = class_group(k).unwrap().h();
        assert_eq!(got, h, "h(Q(sqrt {d}))");
        let disc = field_disc(d);
        if d < 0 {
            assert_eq!(naive_definite_count(disc), h, "naive count for {d}");
            if disc < -4 {
                assert_eq!(analytic_h_imaginary(disc), h as i64, "analytic for {d}");
            }
        } else {
            assert_eq!(analytic_h_real(disc), h as i64, "analytic for {d}");
        }
    }
}

#[test]
fn naive_count_agrees_on_a_range() {
    for d in [-1, -2, -3, -7, -11, -14, -17, -21, -26, -30, -31, -39, -47, -51, -55, -65, -71, -79] {
        let k = make_field(d).unwrap();
        let disc = field_disc(d);
        assert_eq!(class_group(k).unwrap().h(), naive_definite_count(disc), "d = {d}");
    }
}

#[test]
fn kzeta3_divisibility() {
    assert!(!h3_divisibility_of_kzeta3(make_field(2).unwrap()).unwrap().divisible);
    let r = h3_divisibility_of_kzeta3(make_field(29).unwrap()).unwrap();
    assert!(r.divisible);
    // Q(sqrt -87) has class number 6
    assert_eq!(r.h_minus3d, 6);
}

#[test]
fn sunit_solver_matches_brute_force() {
    for (d, k) in [(1, Field::rational()), (2, make_field(2).unwrap())] {
        let basis = s_unit_basis(k, &primes_above(k, 3).unwrap()).unwrap();
        for bound in 1..=4 {
            let brute = brute_sunit_box(&basis, bound, u64::MAX).unwrap();
            let fast = solve_cube_sum(&basis, bound).unwrap().solutions;
            assert_eq!(brute, fast, "d = {d}, bound = {bound}");
        }
    }
}
