//! Exact certification of generic semi-simplicity for the quantum
//! multiplication operator on the hyperplane-generated cohomology of smooth
//! Fano complete intersections in projective space.

pub mod certifier;
pub mod json;
pub mod kernel;
pub mod operator;
pub mod schubert;

pub use certifier::{certify, Certificate, Verdict};
pub use kernel::{Jet, MPoly, Rational, Ring, SquareMatrix, Symbol, UniPoly};
pub use operator::{CoeffTable, CompleteIntersection, OperatorMatrix};
