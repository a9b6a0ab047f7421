//! Exact dense linear algebra over Q by plain Gaussian elimination.

use ciqh_core::kernel::{int, Rational};
use num_traits::Zero;

/// Determinant by fraction-field Gaussian elimination.
pub fn gauss_det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = int(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return int(0);
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let v = &m[col][c] * &f;
                m[r][c] -= v;
            }
        }
    }
    det
}

/// Solves `V·c = v` for the Vandermonde system at nodes `0, 1, …, n`.
pub fn interpolate(values: &[Rational]) -> Vec<Rational> {
    let n = values.len();
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|k| {
            let mut row: Vec<Rational> = (0..n).map(|i| int(k as i64).pow(i as i32)).collect();
            row.push(values[k].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = aug[col][col].clone();
        for c in col..=n {
            aug[col][c] = &aug[col][c] / &pivot;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=n {
                    let v = &aug[col][c] * &f;
                    aug[r][c] -= v;
                }
            }
        }
    }
    aug.into_iter().map(|row| row[n].clone()).collect()
}

/// Coefficients in `h` of `det(A₀ + h·A₁)`, from Gaussian elimination at
/// `n + 1` nodes.
pub fn pencil_oracle(a0: &[Vec<Rational>], a1: &[Vec<Rational>]) -> Vec<Rational> {
    let n = a0.len();
    let values: Vec<Rational> = (0..=n)
        .map(|k| {
            let h = int(k as i64);
            gauss_det((0..n).map(|r| (0..n).map(|c| &a0[r][c] + &h * &a1[r][c]).collect()).collect())
        })
        .collect();
    interpolate(&values)
}
