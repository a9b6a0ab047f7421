//! Operator matrices on `H*_inv` in the basis `H⁰, …, Hⁿ`.
//!
//! Rows index the input class `H^j`, columns the output class `H^m`. All
//! entries are first-order jets in one deformation variable.

use std::collections::HashMap;

use crate::json::JetJson;
use crate::kernel::{Jet, MPoly, Rational, Ring, SquareMatrix, Symbol, UniPoly};

use super::coeffs::CoeffTable;
use super::constraints::BandOffsets;
use super::variety::CompleteIntersection;
use super::OperatorError;

/// Operator matrix over jets with symbolic coefficients.
pub type OperatorMatrix = SquareMatrix<Jet<MPoly>>;

fn require_hypothesis(ci: &CompleteIntersection) -> Result<(), OperatorError> {
    if ci.e() < 3 || !ci.degree_condition() {
        return Err(OperatorError::Hypothesis { n: ci.n(), e: ci.e() });
    }
    Ok(())
}

fn add_entry(m: &mut OperatorMatrix, row: usize, col: usize, v: Jet<MPoly>) {
    let sum = m.get(row, col).add_ref(&v);
    m.set(row, col, sum);
}

fn scalar(p: MPoly) -> Jet<MPoly> {
    Jet::constant(p)
}

fn slope(p: MPoly) -> Jet<MPoly> {
    Jet::linear_in_t(MPoly::zero(), p)
}

/// Classical `H¹` band plus the degree-one `b` band. This is the matrix at
/// the origin and is defined for every Fano complete intersection.
pub fn origin_operator(ci: &CompleteIntersection, coeffs: &CoeffTable) -> Result<SquareMatrix<MPoly>, OperatorError> {
    if !ci.is_fano() {
        return Err(OperatorError::NotFano { n: ci.n(), e: ci.e() });
    }
    let (n, e) = (ci.n() as usize, ci.e() as usize);
    let mut m = SquareMatrix::zeros(n + 1);
    for j in 0..n {
        m.set(j, j + 1, MPoly::one());
    }
    for j in (n + 1 - e)..=n {
        let col = j + e - n - 1;
        let v = m.get(j, col).add_ref(&coeffs.b((j + e - n) as u32));
        m.set(j, col, v);
    }
    Ok(m)
}

/// `H¹ •_w` modulo `t_{2e−3}²`, in the variable `t_{2e−3}`.
pub fn build_mh(ci: &CompleteIntersection, coeffs: &CoeffTable) -> Result<OperatorMatrix, OperatorError> {
    require_hypothesis(ci)?;
    let (n, e) = (ci.n() as usize, ci.e() as usize);
    let mut m = origin_operator(ci, coeffs)?.map(|p| scalar(p.clone()));
    for j in (e - 2)..=n {
        let a = coeffs.a((j + 3 - e) as u32);
        if !a.is_zero() {
            add_entry(&mut m, j, j + 2 - e, slope(a));
        }
    }
    add_entry(&mut m, n, 0, slope(coeffs.c1().scale(&Rational::from_i64(2))));
    Ok(m)
}

/// `H^{n−2e+4} •_w` modulo `t_{2e−3}`.
pub fn build_mw(ci: &CompleteIntersection, coeffs: &CoeffTable) -> Result<OperatorMatrix, OperatorError> {
    require_hypothesis(ci)?;
    let (n, e) = (ci.n() as usize, ci.e() as usize);
    let p = n + 4 - 2 * e;
    let mut m = OperatorMatrix::zeros(n + 1);
    for j in 0..=(n - p) {
        add_entry(&mut m, j, j + p, scalar(MPoly::one()));
    }
    for j in (e - 2)..=n {
        let a = coeffs.a((j + 3 - e) as u32);
        if !a.is_zero() {
            add_entry(&mut m, j, j + 2 - e, scalar(a));
        }
    }
    add_entry(&mut m, n, 0, scalar(coeffs.c1().clone()));
    Ok(m)
}

/// `M_H − δ·s·M_w` in the unscaled variable `s = t_{2e−3}`.
pub fn deformed_operator(ci: &CompleteIntersection, coeffs: &CoeffTable) -> Result<OperatorMatrix, OperatorError> {
    let mh = build_mh(ci, coeffs)?;
    let mw = build_mw(ci, coeffs)?;
    let delta = ci.delta().ok_or(OperatorError::Hypothesis { n: ci.n(), e: ci.e() })?;
    let shift = slope(MPoly::constant(delta));
    Ok(mh.sub(&mw.scale(&shift))?)
}

/// Re-express a matrix in `s` as one in `t = δ·s`.
pub fn rescale(m: &OperatorMatrix, delta: &Rational) -> OperatorMatrix {
    let inv = delta.recip();
    m.map(|x| Jet::new(x.constant_part().clone(), x.linear_part().iter().map(|u| u.scale(&inv)).collect()))
}

/// `A(t)` with `t = δ·t_{2e−3}`, so that `−X(w)/(n−e+2) = A`.
///
/// Built entrywise: the classical `M_w` band becomes `−t`, the deformation
/// band carries `a_i* = (δ⁻¹ − 1)·a_i`, the corner `c₁* = (2δ⁻¹ − 1)·c₁`, and
/// the `b` band is unchanged.
pub fn build_a(ci: &CompleteIntersection, coeffs: &CoeffTable) -> Result<OperatorMatrix, OperatorError> {
    require_hypothesis(ci)?;
    let (n, e) = (ci.n() as usize, ci.e() as usize);
    let p = n + 4 - 2 * e;
    let stars = StarCoefficients::new(ci)?;
    let mut m = origin_operator(ci, coeffs)?.map(|x| scalar(x.clone()));
    for j in 0..=(n - p) {
        add_entry(&mut m, j, j + p, slope(MPoly::from_i64(-1)));
    }
    for j in (e - 2)..=n {
        let a = coeffs.a((j + 3 - e) as u32);
        if !a.is_zero() {
            add_entry(&mut m, j, j + 2 - e, slope(a.scale(&stars.a_factor)));
        }
    }
    add_entry(&mut m, n, 0, slope(coeffs.c1().scale(&stars.c_factor)));
    Ok(m)
}

/// The factors `δ⁻¹ − 1` and `2δ⁻¹ − 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct StarCoefficients {
    pub a_factor: Rational,
    pub c_factor: Rational,
}

impl StarCoefficients {
    pub fn new(ci: &CompleteIntersection) -> Result<Self, OperatorError> {
        let delta = ci.delta().filter(|d| !d.is_zero());
        let delta = delta.ok_or(OperatorError::Hypothesis { n: ci.n(), e: ci.e() })?;
        let inv = delta.recip();
        let one = Rational::from_i64(1);
        Ok(StarCoefficients { a_factor: &inv - &one, c_factor: &inv + &inv - one })
    }
}

/// Every nonzero entry whose offset `m − j` is not among `allowed`.
pub fn entries_off_band<R: Ring>(m: &SquareMatrix<R>, allowed: &[i64]) -> Vec<(usize, usize)> {
    m.nonzero_positions().into_iter().filter(|&(r, c)| !allowed.contains(&(c as i64 - r as i64))).collect()
}

/// Offsets permitted for `M_H`, `M_w` and `A` respectively.
pub fn allowed_offsets(offsets: &BandOffsets) -> [Vec<i64>; 3] {
    let mh = vec![offsets.classical, offsets.quantum, offsets.deformation, offsets.corner];
    let mw = vec![offsets.classical_w, offsets.deformation, offsets.corner];
    let a = offsets.all().to_vec();
    [mh, mw, a]
}

/// First-order expansion of `det A(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DetExpansion {
    /// `det A(t)` computed directly over jets.
    pub det: Jet<MPoly>,
    /// `det Aᵢ(0)` for each 0-based column `i`: column `i` replaced by its
    /// `t`-derivative.
    pub column_terms: Vec<MPoly>,
}

impl DetExpansion {
    pub fn linear(&self) -> MPoly {
        self.det.coeff(0)
    }

    pub fn column_sum(&self) -> MPoly {
        self.column_terms.iter().fold(MPoly::zero(), |acc, x| acc.add_ref(x))
    }
}

pub fn det_linear_coeff(a: &OperatorMatrix) -> Result<DetExpansion, OperatorError> {
    let det = a.det()?;
    let constant = a.map(|x| x.constant_part().clone());
    let derivative = a.map(|x| x.coeff(0));
    let column_terms = (0..a.dim())
        .map(|i| {
            let col = derivative.column(i);
            if col.iter().all(MPoly::is_zero) {
                Ok(MPoly::zero())
            } else {
                constant.with_column(i, &col).det()
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DetExpansion { det, column_terms })
}

/// `G(λ, t) = det(λI − A(t))`.
pub fn char_poly_g(a: &OperatorMatrix) -> UniPoly<Jet<MPoly>> {
    a.char_poly()
}

/// Replace symbols by values; fails if any symbol is left over.
pub fn specialize(
    m: &OperatorMatrix,
    values: &HashMap<Symbol, Rational>,
) -> Result<SquareMatrix<Jet<Rational>>, OperatorError> {
    let mut out = SquareMatrix::zeros(m.dim());
    for r in 0..m.dim() {
        for c in 0..m.dim() {
            let x = m.get(r, c);
            let resolve = |p: &MPoly| p.evaluate(values).ok_or_else(|| OperatorError::Unresolved(p.to_string()));
            let constant = resolve(x.constant_part())?;
            let linear = x.linear_part().iter().map(resolve).collect::<Result<Vec<_>, _>>()?;
            out.set(r, c, Jet::new(constant, linear));
        }
    }
    Ok(out)
}

/// JSON rows of a numeric operator matrix.
pub fn matrix_json(m: &SquareMatrix<Jet<Rational>>) -> Vec<Vec<JetJson>> {
    m.rows().map(|row| row.iter().map(JetJson::from).collect()).collect()
}
