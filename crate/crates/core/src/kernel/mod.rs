//! Exact scalar, symbolic, jet, polynomial and matrix arithmetic.

pub mod jet;
pub mod matrix;
pub mod mpoly;
pub mod numeric;
pub mod poly;
pub mod ring;
mod zpoly;

pub use jet::{Jet, JetError};
pub use matrix::{MatrixError, SquareMatrix};
pub use mpoly::{Family, MPoly, Symbol};
pub use numeric::{numeric_roots, NumericError, RootApprox, RootReport, DEFAULT_DIGITS};
pub use poly::{render_lambda, PolyError, UniPoly};
pub use ring::{format_rational, int, parse_rational, rat, Rational, Ring};
