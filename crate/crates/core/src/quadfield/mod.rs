//! Quadratic fields `Q(sqrt d)` and the rational field in degenerate mode.

mod classgroup;
mod element;
mod forms;
mod group;
mod ideal;
mod primes;
mod units;

use std::fmt;
use std::str::FromStr;

use crate::algebra::arith::is_squarefree;
use crate::error::{Error, Result};

pub use classgroup::{
    class_group, class_group_with_limit, h3_divisibility_of_kzeta3, s_class_group, ClassGroup,
    ClassGroupData, KZeta3Report, SClassGroupData, DEFAULT_DISC_LIMIT,
};
pub use element::Element;
pub use forms::Form;
pub use group::{abelian_structure, element_order};
pub use ideal::Ideal;
pub use primes::{primes_above, splitting_type, PrimeIdeal, Splitting};
pub use units::{fundamental_unit, is_principal, is_principal_with_limit, torsion_generator};

/// Default cap on the number of candidates tried by principality searches.
pub const DEFAULT_SEARCH_LIMIT: u64 = 50_000_000;

/// `Q(sqrt d)` with square-free `d`, or `Q` itself (stored as `d = 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    d: i64,
}

impl Field {
    pub fn rational() -> Self {
        Field { d: 1 }
    }

    pub fn is_rational(&self) -> bool {
        self.d == 1
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn degree(&self) -> u32 {
        if self.is_rational() {
            1
        } else {
            2
        }
    }

    /// True for `Q` and real quadratic fields.
    pub fn is_totally_real(&self) -> bool {
        self.d > 0
    }

    pub fn is_real_quadratic(&self) -> bool {
        self.d > 1
    }

    pub fn is_imaginary(&self) -> bool {
        self.d < 0
    }

    /// Whether `w = (1 + sqrt d)/2` (as opposed to `w = sqrt d`).
    pub fn half_basis(&self) -> bool {
        !self.is_rational() && self.d.rem_euclid(4) == 1
    }

    pub fn discriminant(&self) -> i64 {
        if self.is_rational() || self.half_basis() {
            self.d
        } else {
            4 * self.d
        }
    }

    /// `(t, n)` with `w^2 = t*w + n`.
    pub(crate) fn omega_relation(&self) -> (i64, i64) {
        if self.half_basis() {
            (1, (self.d - 1) / 4)
        } else {
            (0, self.d)
        }
    }

    pub fn basis_description(&self) -> String {
        if self.is_rational() {
            "{1}".to_string()
        } else if self.half_basis() {
            format!("{{1, w}}, w = (1 + sqrt({}))/2", self.d)
        } else {
            format!("{{1, w}}, w = sqrt({})", self.d)
        }
    }
}

/// `Q(sqrt d)`; fails unless `d` is square-free and not 0 or 1.
pub fn make_field(d: i64) -> Result<Field> {
    if d == 0 || d == 1 || !is_squarefree(d) {
        return Err(Error::NotSquareFree(d));
    }
    Ok(Field { d })
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "Q")
        } else {
            write!(f, "Q(sqrt {})", self.d)
        }
    }
}

/// Accepts `Q`, `Q(sqrt D)`, `Q(sqrt(D))` and `Q(sqrtD)`.
impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "Q" {
            return Ok(Field::rational());
        }
        let inner = t
            .strip_prefix("Q(sqrt")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad field `{s}`")))?;
        let inner = inner
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(inner);
        let d: i64 = inner
            .parse()
            .map_err(|_| Error::Parse(format!("bad field `{s}`")))?;
        make_field(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        let k = make_field(2).unwrap();
        assert_eq!((k.degree(), k.discriminant(), k.half_basis()), (2, 8, false));
        let k = make_field(5).unwrap();
        assert_eq!((k.discriminant(), k.half_basis()), (5, true));
        assert_eq!(make_field(12), Err(Error::NotSquareFree(12)));
        assert_eq!(make_field(-15).unwrap().discriminant(), -15);
        assert_eq!(make_field(-6).unwrap().discriminant(), -24);
    }

    #[test]
    fn parse_fields() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::rational());
        assert_eq!("Q(sqrt 2)".parse::<Field>().unwrap().d(), 2);
        assert_eq!("Q(sqrt(-87))".parse::<Field>().unwrap().d(), -87);
        assert!("Q(sqrt 8)".parse::<Field>().is_err());
        assert_eq!(make_field(-6).unwrap().to_string(), "Q(sqrt -6)");
    }
}
