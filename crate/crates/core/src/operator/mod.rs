//! Quantum multiplication operators on the invariant cohomology of a Fano
//! complete intersection, truncated at first order in one deformation
//! variable.

mod coeffs;
mod constraints;
mod formulas;
mod matrices;
mod variety;

use thiserror::Error;

use crate::kernel::MatrixError;

pub use coeffs::CoeffTable;
pub use constraints::{in_admissible_set, insertion_constraint_solutions, BandOffsets, ConstraintSolution};
pub use formulas::{
    bracket, closed_form, closed_form_text, first_column_term, last_column_term, last_contributing_column,
};
pub use matrices::{
    allowed_offsets, build_a, build_mh, build_mw, char_poly_g, deformed_operator, det_linear_coeff, entries_off_band,
    matrix_json, origin_operator, rescale, specialize, DetExpansion, OperatorMatrix, StarCoefficients,
};
pub use variety::{CompleteIntersection, VarietyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperatorError {
    #[error("requires e >= 3 and n > 2e - 3 (got n={n}, e={e})")]
    Hypothesis { n: u32, e: u32 },
    #[error("not Fano: e={e} exceeds n+1={}", n + 1)]
    NotFano { n: u32, e: u32 },
    #[error("deformation order {0} is beyond the first-order truncation")]
    UnsupportedOrder(u32),
    #[error("unresolved symbolic entry {0}")]
    Unresolved(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
