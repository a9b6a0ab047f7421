use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kernel::{int, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VarietyError {
    #[error("at least one defining degree is required")]
    NoDegrees,
    #[error("defining degrees must be positive")]
    ZeroDegree,
    #[error("dimension n must be positive")]
    ZeroDimension,
}

/// A smooth complete intersection `V ⊂ P^{n+r}` of dimension `n`, cut out by
/// hypersurfaces of degrees `d₁ ≤ … ≤ d_r`, each at least 2.
///
/// Degree-one equations only cut down the ambient projective space, so they
/// are dropped on construction; the number dropped is kept for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompleteIntersection {
    n: u32,
    degrees: Vec<u32>,
    dropped_linear: u32,
}

impl CompleteIntersection {
    pub fn new(n: u32, degrees: &[u32]) -> Result<Self, VarietyError> {
        if n == 0 {
            return Err(VarietyError::ZeroDimension);
        }
        if degrees.is_empty() {
            return Err(VarietyError::NoDegrees);
        }
        if degrees.contains(&0) {
            return Err(VarietyError::ZeroDegree);
        }
        let mut kept: Vec<u32> = degrees.iter().copied().filter(|&d| d > 1).collect();
        kept.sort_unstable();
        let dropped_linear = (degrees.len() - kept.len()) as u32;
        Ok(CompleteIntersection { n, degrees: kept, dropped_linear })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Normalized degrees (all ≥ 2); empty for projective space.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn dropped_linear(&self) -> u32 {
        self.dropped_linear
    }

    pub fn r(&self) -> u32 {
        self.degrees.len() as u32
    }

    /// Degree `d = ∏ dᵢ`.
    pub fn degree(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    /// `e = 1 + Σ (dᵢ − 1)`.
    pub fn e(&self) -> u32 {
        1 + self.degrees.iter().map(|d| d - 1).sum::<u32>()
    }

    /// `c₁(V) = (n + 2 − e)·H`; negative or zero when not Fano.
    pub fn fano_index(&self) -> i64 {
        self.n as i64 + 2 - self.e() as i64
    }

    pub fn is_fano(&self) -> bool {
        self.fano_index() >= 1
    }

    /// `n > 2e − 3`.
    pub fn degree_condition(&self) -> bool {
        (self.n as i64) > 2 * self.e() as i64 - 3
    }

    /// `δ = (n − 2e + 3)/(n − e + 2)`; `None` when the denominator vanishes.
    pub fn delta(&self) -> Option<Rational> {
        let den = self.fano_index();
        (den != 0).then(|| Rational::new(BigInt::from(self.n as i64 - 2 * self.e() as i64 + 3), BigInt::from(den)))
    }

    /// `∏ dᵢ^{dᵢ}`, the constant in the characteristic polynomial at the
    /// origin.
    pub fn origin_constant(&self) -> BigInt {
        self.degrees.iter().fold(BigInt::one(), |acc, &d| acc * BigInt::from(d).pow(d))
    }

    pub fn origin_constant_rational(&self) -> Rational {
        Rational::from_integer(self.origin_constant())
    }

    /// `n − 2e + 4`, the power of `H` in the deformation direction.
    pub fn deformation_power(&self) -> i64 {
        self.n as i64 - 2 * self.e() as i64 + 4
    }

    /// The scale relating `X(w)` to the operator `A`: `X(w) = −(n−e+2)·A`.
    pub fn x_scale(&self) -> Rational {
        int(-self.fano_index())
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degs: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "n={} d=({})", self.n, degs.join(","))
    }
}
