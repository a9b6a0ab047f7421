//! Wire formats shared by certificates and matrix dumps.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kernel::{Jet, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WireError {
    #[error("malformed integer {0:?}")]
    BadInteger(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Exact rational as decimal strings, `{"num": "-3", "den": "2"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalJson {
    fn from(q: &Rational) -> Self {
        RationalJson { num: q.numer().to_string(), den: q.denom().to_string() }
    }
}

impl TryFrom<&RationalJson> for Rational {
    type Error = WireError;

    fn try_from(r: &RationalJson) -> Result<Self, WireError> {
        let num: BigInt = r.num.parse().map_err(|_| WireError::BadInteger(r.num.clone()))?;
        let den: BigInt = r.den.parse().map_err(|_| WireError::BadInteger(r.den.clone()))?;
        if den == BigInt::from(0) {
            return Err(WireError::ZeroDenominator);
        }
        Ok(Rational::new(num, den))
    }
}

/// A single-variable jet entry `constant + linear·t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JetJson {
    pub constant: RationalJson,
    pub linear: RationalJson,
}

impl From<&Jet<Rational>> for JetJson {
    fn from(j: &Jet<Rational>) -> Self {
        JetJson { constant: j.constant_part().into(), linear: (&j.coeff(0)).into() }
    }
}

impl TryFrom<&JetJson> for Jet<Rational> {
    type Error = WireError;

    fn try_from(j: &JetJson) -> Result<Self, WireError> {
        Ok(Jet::linear_in_t(Rational::try_from(&j.constant)?, Rational::try_from(&j.linear)?))
    }
}
