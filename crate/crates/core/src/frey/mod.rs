//! The Frey curve `Y^2 + 3Cc XY + C^2 B b^p Y = X^3` attached to a solution of
//! `A a^p + B b^p = C c^3`, and local information about it.

mod model;
mod reduction;

pub use model::{frey_model, j_from_mu, mu_of, FreyParams, WeierstrassInvariants};
pub use reduction::{
    classify_at_3_over_k, classify_away_from_sprime, conductor_exponent_bound, jprime_of_params,
    jprime_valuation_from_mu,
    kraus_inertia, p_bound_at_3, vj_symbolic_at_3, DividesWhich, InertiaClaim, JPrimeCase, JPrimeReport,
    KrausDirection, KrausOutcome, LinearInP, ReductionKind, ReductionVerdict, VjAt3,
};
