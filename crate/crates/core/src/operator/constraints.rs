//! Dimension constraints selecting which Gromov–Witten terms can reach the
//! operator matrices.
//!
//! Insertions are indexed by `a ∈ 1..=n−1`, the class `H^{n+1−a}`. A degree-`k`
//! term with insertion counts `k_a` survives only when
//! `Σ (n − a)·k_a = (n + 2 − e)·k + n − 3`.

use serde::{Deserialize, Serialize};

use super::OperatorError;

/// One solution of the constraint: curve degree `k` and `j + m`, the sum of
/// the two free insertion indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ConstraintSolution {
    pub k: u32,
    pub index_sum: u32,
}

/// Whether the insertion multiset `counts` (pairs `(a, k_a)`) belongs to the
/// admissible set for curve degree `k`.
pub fn in_admissible_set(n: u32, e: u32, k: u32, counts: &[(u32, u32)]) -> bool {
    if k == 0 || counts.iter().any(|&(a, _)| a == 0 || a >= n) {
        return false;
    }
    let lhs: i64 = counts.iter().map(|&(a, ka)| (n - a) as i64 * ka as i64).sum();
    let rhs = (n as i64 + 2 - e as i64) * k as i64 + n as i64 - 3;
    rhs > 0 && lhs == rhs
}

/// Solutions with two free insertions `j, m` and `k_w ∈ {0, 1}` copies of
/// the deformation class (index `2e − 3`).
///
/// Closed form: `j + m = n + 3 + (n − 2e + 3)·k_w − (n + 2 − e)·k`, kept when
/// `k ≥ 1` and `2 ≤ j + m ≤ 2n − 2`.
pub fn insertion_constraint_solutions(n: u32, e: u32, k_w: u32) -> Result<Vec<ConstraintSolution>, OperatorError> {
    if k_w >= 2 {
        return Err(OperatorError::UnsupportedOrder(k_w));
    }
    if e < 3 || n <= 2 * e - 3 {
        return Err(OperatorError::Hypothesis { n, e });
    }
    let (n_i, e_i) = (n as i64, e as i64);
    let fano = n_i + 2 - e_i;
    let top = n_i + 3 + (n_i - 2 * e_i + 3) * k_w as i64;
    let mut out = Vec::new();
    let mut k = 1i64;
    while top - fano * k >= 2 {
        let s = top - fano * k;
        if s <= 2 * n_i - 2 {
            out.push(ConstraintSolution { k: k as u32, index_sum: s as u32 });
        }
        k += 1;
    }
    Ok(out)
}

/// Column offsets `m − j` of every band an operator entry may occupy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandOffsets {
    /// Classical `H¹` multiplication.
    pub classical: i64,
    /// Classical multiplication by the deformation class `H^{n−2e+4}`.
    pub classical_w: i64,
    /// Degree-one quantum correction without deformation.
    pub quantum: i64,
    /// Degree-one term with one deformation insertion.
    pub deformation: i64,
    /// Degree-two term with one deformation insertion.
    pub corner: i64,
}

impl BandOffsets {
    /// Reads the offsets off the constraint solutions: a solution with index
    /// sum `S` moves `H^j` to `H^{j + S − n − 2}`.
    pub fn from_constraints(n: u32, e: u32) -> Result<Self, OperatorError> {
        let shift = |s: u32| s as i64 - n as i64 - 2;
        let plain = insertion_constraint_solutions(n, e, 0)?;
        let deformed = insertion_constraint_solutions(n, e, 1)?;
        let pick = |sols: &[ConstraintSolution], k: u32| sols.iter().find(|s| s.k == k).map(|s| shift(s.index_sum));
        let missing = || OperatorError::Hypothesis { n, e };
        Ok(BandOffsets {
            classical: 1,
            classical_w: n as i64 - 2 * e as i64 + 4,
            quantum: pick(&plain, 1).ok_or_else(missing)?,
            deformation: pick(&deformed, 1).ok_or_else(missing)?,
            corner: pick(&deformed, 2).ok_or_else(missing)?,
        })
    }

    pub fn all(&self) -> [i64; 5] {
        [self.classical, self.classical_w, self.quantum, self.deformation, self.corner]
    }
}
