//! The max-plus walk on `Z`: coins, evolution, state-decision matrices and
//! their eigenvalues.

pub mod coin;
pub mod eigen;
pub mod sdm;
pub mod state;

pub use coin::{Basis, Coin};
pub use eigen::{
    branch_eigenvalue, check_condition_a, eigen_sum, eigen_sum_closed_form, position_eigen_sum,
    sdm_eigenvalue, Branch, BranchEigenvalue, ConditionAReport,
};
pub use sdm::{
    positions, sdm_closed_form, sdm_closed_form_grid, sdm_recursive, sdm_recursive_history,
    sdm_under_condition_a, LrCounts, SdmGrid,
};
pub use state::{evolve, Amplitude, WalkState};
