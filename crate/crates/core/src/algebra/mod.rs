//! Exact arithmetic substrate.

pub mod arith;
pub mod cf;
pub mod dedekind;
pub mod fp;
pub mod poly;

pub use arith::rational_cube_root;
pub use cf::{cf_sqrt, CfExpansion};
pub use dedekind::{index_coprime, is_irreducible_over_q};
pub use fp::{factor_mod_p, FpPoly};
pub use num_rational::BigRational;
pub use poly::IntPolynomial;
