//! Shared inputs for the benchmarks.

use ciqh_core::kernel::{int, Rational, SquareMatrix};
use ciqh_core::operator::CompleteIntersection;

/// Deterministic dense integer matrix with small entries.
pub fn dense_matrix(dim: usize) -> SquareMatrix<Rational> {
    let rows = (0..dim).map(|r| (0..dim).map(|c| int(((r * 7 + c * 13 + r * c) % 11) as i64 - 5)).collect()).collect();
    SquareMatrix::from_rows(rows).expect("square")
}

pub fn case(n: u32, degrees: &[u32]) -> CompleteIntersection {
    CompleteIntersection::new(n, degrees).expect("valid case")
}
