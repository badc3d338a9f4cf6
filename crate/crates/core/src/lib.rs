//! Exact computations around the equation `A x^p + B y^p = C z^3` over
//! quadratic fields: field arithmetic, S-unit cube sums, Frey curve
//! invariants, hypothesis checkers and a brute-force search harness.

pub mod algebra;
pub mod criteria;
pub mod error;
pub mod frey;
pub mod harness;
pub mod quadfield;
pub mod sunits;

pub use error::{Error, Result};
