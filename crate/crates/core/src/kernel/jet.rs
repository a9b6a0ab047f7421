//! First-order jets: `c + Σ uᵢ zᵢ` modulo `(z₁, …, z_N)²`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use super::ring::{Rational, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JetError {
    #[error("jet variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("jet with zero constant term is not a unit")]
    NonUnit,
    #[error("variable index {index} out of range for {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },
}

/// A truncated power series of total order one.
///
/// A jet with `num_vars == 0` is a pure scalar and combines with a jet in
/// any number of variables; two jets that both carry variables must agree on
/// their count.
#[derive(Clone)]
pub struct Jet<R: Ring = Rational> {
    constant: R,
    linear: Vec<R>,
}

impl<R: Ring> Jet<R> {
    pub fn new(constant: R, linear: Vec<R>) -> Self {
        Jet { constant, linear }
    }

    pub fn constant(c: R) -> Self {
        Jet { constant: c, linear: Vec::new() }
    }

    /// The coordinate function `z_index` in a ring of `num_vars` variables.
    pub fn variable(index: usize, num_vars: usize) -> Result<Self, JetError> {
        if index >= num_vars {
            return Err(JetError::VariableOutOfRange { index, num_vars });
        }
        let mut linear = vec![R::zero(); num_vars];
        linear[index] = R::one();
        Ok(Jet { constant: R::zero(), linear })
    }

    /// Single-variable shorthand `c + u·t`.
    pub fn linear_in_t(constant: R, slope: R) -> Self {
        Jet { constant, linear: vec![slope] }
    }

    pub fn num_vars(&self) -> usize {
        self.linear.len()
    }

    pub fn constant_part(&self) -> &R {
        &self.constant
    }

    pub fn linear_part(&self) -> &[R] {
        &self.linear
    }

    /// Coefficient of `z_i`; zero when the jet is a pure scalar.
    pub fn coeff(&self, i: usize) -> R {
        self.linear.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// True when both the constant and every linear coefficient vanish,
    /// i.e. the jet lies in `(z)²`.
    pub fn in_square_of_maximal_ideal(&self) -> bool {
        self.constant.is_zero() && self.linear.iter().all(|c| c.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        !self.constant.is_zero()
    }

    fn common_vars(&self, rhs: &Self) -> Result<usize, JetError> {
        match (self.linear.len(), rhs.linear.len()) {
            (0, m) => Ok(m),
            (n, 0) => Ok(n),
            (n, m) if n == m => Ok(n),
            (n, m) => Err(JetError::VariableMismatch(n, m)),
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, JetError> {
        let n = self.common_vars(rhs)?;
        let linear = (0..n).map(|i| self.coeff(i).add_ref(&rhs.coeff(i))).collect();
        Ok(Jet { constant: self.constant.add_ref(&rhs.constant), linear })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, JetError> {
        let n = self.common_vars(rhs)?;
        let linear = (0..n).map(|i| self.coeff(i).sub_ref(&rhs.coeff(i))).collect();
        Ok(Jet { constant: self.constant.sub_ref(&rhs.constant), linear })
    }

    /// `(a + Σuᵢzᵢ)(b + Σvᵢzᵢ) = ab + Σ(a vᵢ + b uᵢ) zᵢ`.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, JetError> {
        let n = self.common_vars(rhs)?;
        let linear = (0..n)
            .map(|i| {
                let u = self.coeff(i);
                let v = rhs.coeff(i);
                let left = if v.is_zero() { R::zero() } else { self.constant.mul_ref(&v) };
                let right = if u.is_zero() { R::zero() } else { rhs.constant.mul_ref(&u) };
                left.add_ref(&right)
            })
            .collect();
        Ok(Jet { constant: self.constant.mul_ref(&rhs.constant), linear })
    }

    /// Evaluates the linear truncation at a point `z`.
    pub fn evaluate(&self, point: &[R]) -> R {
        self.linear.iter().zip(point).fold(self.constant.clone(), |acc, (u, z)| acc.add_ref(&u.mul_ref(z)))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Jet<S> {
        Jet { constant: f(&self.constant), linear: self.linear.iter().map(f).collect() }
    }
}

impl Jet<Rational> {
    /// Inverse in the jet ring: `(c + u)⁻¹ = c⁻¹ − c⁻² u`.
    pub fn invert(&self) -> Result<Self, JetError> {
        if !self.is_unit() {
            return Err(JetError::NonUnit);
        }
        let inv = self.constant.recip();
        let inv2 = &inv * &inv;
        Ok(Jet { linear: self.linear.iter().map(|u| -(u * &inv2)).collect(), constant: inv })
    }
}

impl<R: Ring> Ring for Jet<R> {
    fn zero() -> Self {
        Jet::constant(R::zero())
    }
    fn one() -> Self {
        Jet::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.in_square_of_maximal_ideal()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("jet variable mismatch")
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("jet variable mismatch")
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("jet variable mismatch")
    }
    fn neg_ref(&self) -> Self {
        Jet { constant: self.constant.neg_ref(), linear: self.linear.iter().map(Ring::neg_ref).collect() }
    }
    fn from_rational(q: &Rational) -> Self {
        Jet::constant(R::from_rational(q))
    }
}

// A scalar jet equals the same value written with explicit zero slopes.
impl<R: Ring> PartialEq for Jet<R> {
    fn eq(&self, rhs: &Self) -> bool {
        let n = self.linear.len().max(rhs.linear.len());
        self.constant == rhs.constant && (0..n).all(|i| self.coeff(i) == rhs.coeff(i))
    }
}

impl<R: Ring> Add for &Jet<R> {
    type Output = Jet<R>;
    fn add(self, rhs: Self) -> Jet<R> {
        self.add_ref(rhs)
    }
}

impl<R: Ring> Sub for &Jet<R> {
    type Output = Jet<R>;
    fn sub(self, rhs: Self) -> Jet<R> {
        self.sub_ref(rhs)
    }
}

impl<R: Ring> Mul for &Jet<R> {
    type Output = Jet<R>;
    fn mul(self, rhs: Self) -> Jet<R> {
        self.mul_ref(rhs)
    }
}

impl<R: Ring> Neg for &Jet<R> {
    type Output = Jet<R>;
    fn neg(self) -> Jet<R> {
        self.neg_ref()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Jet<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for (i, u) in self.linear.iter().enumerate() {
            if !u.is_zero() {
                write!(f, " + ({u})·z{}", i + 1)?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Jet<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jet({:?}; {:?})", self.constant, self.linear)
    }
}
