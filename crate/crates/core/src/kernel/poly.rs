//! Dense univariate polynomials, lowest degree first.
//!
//! Ring operations work over any [`Ring`]; division, gcd, resultants and
//! discriminants are provided over [`Rational`].
//!
//! Sign conventions: `resultant(f, g) = lc(f)^deg g · ∏ g(α)` over the roots
//! `α` of `f` (the Sylvester determinant with the coefficients of `f` in the
//! first `deg g` rows), and
//! `discriminant(f) = (-1)^(m(m-1)/2) · resultant(f, f') / lc(f)` with
//! `m = deg f`, so that `discriminant(x² + bx + c) = b² − 4c`.

use std::fmt;

use thiserror::Error;

use super::ring::{format_rational, Rational, Ring};
use super::zpoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

#[derive(Clone, PartialEq)]
pub struct UniPoly<R: Ring = Rational> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    /// Builds from coefficients `c₀, c₁, …`; trailing zeros are dropped.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn evaluate(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.mul_ref(&R::from_i64(k as i64))).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add_ref(&rhs.coeff(k))).collect())
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub_ref(&rhs.coeff(k))).collect())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::new(out)
    }
    fn neg_ref(&self) -> Self {
        Self::new(self.coeffs.iter().map(Ring::neg_ref).collect())
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }
}

impl UniPoly<Rational> {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_i64(c)).collect())
    }

    /// Euclidean division; `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero iff both inputs are zero),
    /// computed by a primitive remainder sequence over Z.
    pub fn gcd(&self, other: &Self) -> Self {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Self::zero(),
            (true, false) => return other.make_monic(),
            (false, true) => return self.make_monic(),
            _ => {}
        }
        let (_, f) = zpoly::split_rational(&self.coeffs);
        let (_, g) = zpoly::split_rational(&other.coeffs);
        Self::new(zpoly::gcd(&f, &g).into_iter().map(Rational::from_integer).collect()).make_monic()
    }

    /// Exact quotient when `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        Ok(self.div_rem(divisor)?.0)
    }

    /// Resultant by the subresultant sequence on the integer primitive
    /// parts: `Res(c·F, d·G) = c^{deg G}·d^{deg F}·Res(F, G)`.
    pub fn resultant(&self, other: &Self) -> Result<Rational, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let (cf, f) = zpoly::split_rational(&self.coeffs);
        let (cg, g) = zpoly::split_rational(&other.coeffs);
        let (m, n) = (f.len() - 1, g.len() - 1);
        let scale = Ring::pow(&cf, n as u32) * Ring::pow(&cg, m as u32);
        Ok(scale * Rational::from_integer(zpoly::resultant(&f, &g)))
    }

    pub fn discriminant(&self) -> Result<Rational, PolyError> {
        let m = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        if m == 0 {
            return Ok(Rational::one());
        }
        let res = self.resultant(&self.derivative())?;
        let sign = if (m * (m - 1) / 2) % 2 == 1 { -Rational::one() } else { Rational::one() };
        Ok(sign * res / self.leading().unwrap())
    }

    pub fn is_squarefree(&self) -> bool {
        self.discriminant().map(|d| !d.is_zero()).unwrap_or(false)
    }

    /// Yun's squarefree decomposition: monic factors `(s_k, k)` with
    /// `self = lc · ∏ s_k^k`, each `s_k` squarefree and pairwise coprime.
    /// Factors equal to 1 are omitted.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let f = self.make_monic();
        if f.degree() == Some(0) {
            return Ok(Vec::new());
        }
        if self.is_squarefree() {
            return Ok(vec![(f, 1)]);
        }
        let mut out = Vec::new();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0)?;
        let mut c = fp.exact_div(&a0)?;
        let mut d = c.sub_ref(&b.derivative());
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.exact_div(&a)?;
            c = d.exact_div(&a)?;
            d = c.sub_ref(&b.derivative());
            k += 1;
        }
        Ok(out)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·x")?,
                _ => write!(f, "({c})·x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs)
    }
}

/// Human-readable rendering of a rational polynomial in `λ`, highest degree
/// first, e.g. `λ^6 - 27λ^2`.
pub fn render_lambda(p: &UniPoly<Rational>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show_coeff = !mag.is_one() || k == 0;
        if show_coeff {
            out.push_str(&format_rational(&mag));
        }
        match k {
            0 => {}
            1 => out.push('λ'),
            _ => out.push_str(&format!("λ^{k}")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::ring::int;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        let z = p(&[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn quadratic_discriminant() {
        // x^2 + 3x + 1 -> 9 - 4 = 5
        assert_eq!(p(&[1, 3, 1]).discriminant().unwrap(), int(5));
        // 2x^2 + 3x + 1 -> 9 - 8 = 1 with the lc-normalized convention
        assert_eq!(p(&[1, 3, 2]).discriminant().unwrap(), int(1));
        assert_eq!(p(&[1, 2, 1]).discriminant().unwrap(), int(0));
    }

    #[test]
    fn resultant_sign_convention() {
        // Res(x-1, x+1) = lc^1 * (1+1) = 2
        assert_eq!(p(&[-1, 1]).resultant(&p(&[1, 1])).unwrap(), int(2));
        assert_eq!(p(&[1, 1]).resultant(&p(&[-1, 1])).unwrap(), int(-2));
        assert_eq!(p(&[]).resultant(&p(&[1])), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn cubic_with_two_factors_is_squarefree() {
        // x^3 - 2x + 1 = (x-1)(x^2+x-1)
        let f = p(&[1, -2, 0, 1]);
        let d = f.discriminant().unwrap();
        assert!(!d.is_zero());
        // -4(-2)^3 - 27 = 32 - 27 = 5
        assert_eq!(d, int(5));
    }

    #[test]
    fn yun_on_repeated_roots() {
        // x^6 - 27 x^2 = x^2 (x^4 - 27)
        let f = p(&[0, 0, -27, 0, 0, 0, 1]);
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(p(&[-27, 0, 0, 0, 1]), 1), (p(&[0, 1]), 2)]);
        // (x-1)^3 (x+2)
        let g = p(&[-1, 1]).pow(3).mul_ref(&p(&[2, 1]));
        let dec = g.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 3)]);
    }

    #[test]
    fn rendering() {
        assert_eq!(render_lambda(&p(&[0, 0, -27, 0, 0, 0, 1])), "λ^6 - 27λ^2");
        assert_eq!(render_lambda(&p(&[-1, 0, 1])), "λ^2 - 1");
    }
}
