//! S-unit groups of quadratic fields and the cube-sum equation `alpha + beta = gamma^3`.

mod basis;
mod conditions;
mod solve;
mod theta;

pub use basis::{s_unit_basis, SUnitBasis};
pub use conditions::{
    check_condition_k, check_condition_t1, check_condition_t2, v3, ClassCheck, ConditionReport,
};
pub use solve::{
    canonicalize, cube_root_in_field, solve_cube_sum, solve_cube_sum_bounds, solve_cube_sum_with_cap, solve_unit_plus_one, CubeSumSolutions,
    SUnitTriple, UnitPlusOne, DEFAULT_WORK_CAP,
};
pub use theta::{theta_check, ThetaReport, ThetaVerdict};
