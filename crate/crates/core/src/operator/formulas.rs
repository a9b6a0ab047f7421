//! Closed forms for the first-order determinant of `A(t)`.

use crate::kernel::{MPoly, Rational, Ring};

use super::coeffs::CoeffTable;
use super::matrices::StarCoefficients;
use super::variety::CompleteIntersection;
use super::OperatorError;

fn sign(n: u32) -> Rational {
    Rational::from_i64(if n.is_multiple_of(2) { 1 } else { -1 })
}

struct Boundary {
    a1: MPoly,
    a_last: MPoly,
    b1: MPoly,
    be: MPoly,
    c1: MPoly,
}

fn boundary(ci: &CompleteIntersection, coeffs: &CoeffTable) -> Result<Boundary, OperatorError> {
    let s = StarCoefficients::new(ci)?;
    let last = ci.n() + 3 - ci.e();
    Ok(Boundary {
        a1: coeffs.a(1).scale(&s.a_factor),
        a_last: coeffs.a(last).scale(&s.a_factor),
        b1: coeffs.b(1),
        be: coeffs.b(ci.e()),
        c1: coeffs.c1().scale(&s.c_factor),
    })
}

/// `(−1)ⁿ (c₁* − a₁*·b_e − a_{n−e+3}*·b₁ − b₁·b_e)`.
pub fn bracket(ci: &CompleteIntersection, coeffs: &CoeffTable) -> Result<MPoly, OperatorError> {
    let x = boundary(ci, coeffs)?;
    let inner = x.c1.sub_ref(&x.a1.mul_ref(&x.be)).sub_ref(&x.a_last.mul_ref(&x.b1)).sub_ref(&x.b1.mul_ref(&x.be));
    Ok(inner.scale(&sign(ci.n())))
}

/// `det A₁(0) = (−1)ⁿ (c₁* − a₁*·b_e)`.
pub fn first_column_term(ci: &CompleteIntersection, coeffs: &CoeffTable) -> Result<MPoly, OperatorError> {
    let x = boundary(ci, coeffs)?;
    Ok(x.c1.sub_ref(&x.a1.mul_ref(&x.be)).scale(&sign(ci.n())))
}

/// `det A_{n−e+3}(0) = (−1)^{n+1} b₁ (a_{n−e+3}* + b_e)`.
pub fn last_column_term(ci: &CompleteIntersection, coeffs: &CoeffTable) -> Result<MPoly, OperatorError> {
    let x = boundary(ci, coeffs)?;
    Ok(x.b1.mul_ref(&x.a_last.add_ref(&x.be)).scale(&sign(ci.n() + 1)))
}

/// 0-based column of the second contributing derivative, `n − e + 2`.
pub fn last_contributing_column(ci: &CompleteIntersection) -> usize {
    (ci.n() + 2 - ci.e()) as usize
}

/// The bracket after pinning boundary values to `l₀`:
/// `(−1)^{n+1}(δ⁻¹ − ½)·l₀²` for `e > 3`, `(−1)ⁿ((n−1)/(n−3) − 3/2)·l₀²` for
/// `e = 3`.
pub fn closed_form(ci: &CompleteIntersection, l0: &Rational) -> Result<Rational, OperatorError> {
    let (n, e) = (ci.n(), ci.e());
    if e < 3 || !ci.degree_condition() {
        return Err(OperatorError::Hypothesis { n, e });
    }
    let l2 = l0 * l0;
    if e == 3 {
        let v = Rational::new((n as i64 - 1).into(), (n as i64 - 3).into()) - Rational::new(3.into(), 2.into());
        Ok(sign(n) * v * l2)
    } else {
        let delta = ci.delta().ok_or(OperatorError::Hypothesis { n, e })?;
        let v = delta.recip() - Rational::new(1.into(), 2.into());
        Ok(sign(n + 1) * v * l2)
    }
}

/// Text rendering of the closed form used in certificates.
pub fn closed_form_text(ci: &CompleteIntersection) -> String {
    if ci.e() == 3 {
        "(-1)^n*((n-1)/(n-3) - 3/2)*l0^2".to_string()
    } else {
        "(-1)^(n+1)*(1/delta - 1/2)*l0^2".to_string()
    }
}
