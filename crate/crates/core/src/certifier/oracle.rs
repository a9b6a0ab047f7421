//! Independent randomized check: specialize every coefficient, form `G(λ)`
//! at a small rational deformation parameter and test its roots exactly and
//! numerically.

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::json::RationalJson;
use crate::kernel::{numeric_roots, Rational, Ring, SquareMatrix, Symbol, UniPoly, DEFAULT_DIGITS};
use crate::operator::{build_a, specialize, CoeffTable, CompleteIntersection};

use super::certify::{certify, Verdict};
use super::lemmas::origin_polynomial;
use super::CertifyError;

pub const DEFAULT_SEED: u64 = 0x005e_ed0f_c1a5;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub index: u64,
    /// Sampled `t_{2e−3}`; zero when the origin already decides.
    pub t: RationalJson,
    pub discriminant_nonzero: bool,
    pub min_gap: f64,
    pub gap_lower_bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub seed: u64,
    pub samples: u64,
    pub successes: u64,
    pub failures: u64,
    /// Smallest root gap over all samples.
    pub min_gap: f64,
    /// Set when every sample had a repeated root although the certificate
    /// asserted genericity.
    pub contradiction: bool,
    pub reports: Vec<SampleReport>,
}

/// `p/q` with `0 < |p| ≤ 100`, `1 ≤ q ≤ 100`.
fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut p = 0i64;
    while p == 0 {
        p = rng.gen_range(-100..=100);
    }
    let q: i64 = rng.gen_range(1..=100);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Interior values are random; `b_{e−1}` absorbs the difference so that
/// `Σ bᵢ = ∏ dᵢ^{dᵢ}`, keeping `G(λ, 0)` equal to the origin polynomial.
fn sample_values(ci: &CompleteIntersection, coeffs: &CoeffTable, rng: &mut ChaCha8Rng) -> HashMap<Symbol, Rational> {
    let e = ci.e();
    let balance = Symbol::b(e - 1);
    let mut values = HashMap::new();
    for s in coeffs.free_symbols() {
        if s != balance {
            values.insert(s, small_rational(rng));
        }
    }
    let others = (1..=e)
        .filter(|&i| i != e - 1)
        .map(|i| coeffs.b(i).evaluate(&values).expect("b values resolved"))
        .fold(Rational::from_i64(0), |acc, x| acc + x);
    values.insert(balance, ci.origin_constant_rational() - others);
    values
}

fn sample_polynomial(
    ci: &CompleteIntersection,
    coeffs: &CoeffTable,
    seed: u64,
    index: u64,
) -> Result<(Rational, UniPoly<Rational>), CertifyError> {
    if ci.e() <= 2 {
        let g = origin_polynomial(ci.n(), ci.e(), &ci.origin_constant_rational());
        return Ok((Rational::from_i64(0), g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let values = sample_values(ci, coeffs, &mut rng);
    let s = small_rational(&mut rng) / Rational::from_i64(1000);
    let delta = ci.delta().expect("hypothesis checked");
    let t = &delta * &s;
    let a = specialize(&build_a(ci, &coeffs.substitute(&values))?, &HashMap::new())?;
    let at_t: SquareMatrix<Rational> = a.map(|x| x.evaluate(std::slice::from_ref(&t)));
    Ok((s, at_t.char_poly()))
}

/// Runs `samples` specializations with per-sample streams derived from
/// `(seed, index)`, so results do not depend on thread scheduling.
pub fn numeric_oracle(ci: &CompleteIntersection, samples: u64, seed: u64) -> Result<OracleReport, CertifyError> {
    let cert = certify(ci)?;
    if !matches!(cert.verdict, Verdict::CertifiedGenericSemisimple | Verdict::SemisimpleAtOrigin) {
        return Err(CertifyError::OracleRefused(cert.verdict));
    }
    let coeffs = match cert.l0_value() {
        Some(l0) => CoeffTable::beauville(ci, &l0),
        None => CoeffTable::symbolic(ci),
    };
    let reports = (0..samples)
        .into_par_iter()
        .map(|index| {
            let (t, g) = sample_polynomial(ci, &coeffs, seed, index)?;
            let discriminant_nonzero = !g.discriminant()?.is_zero();
            let roots = numeric_roots(&g, DEFAULT_DIGITS)?;
            Ok(SampleReport {
                index,
                t: (&t).into(),
                discriminant_nonzero,
                min_gap: roots.min_gap,
                gap_lower_bound: roots.gap_lower_bound,
            })
        })
        .collect::<Result<Vec<_>, CertifyError>>()?;
    let successes = reports.iter().filter(|r| r.discriminant_nonzero).count() as u64;
    let min_gap = reports.iter().map(|r| r.min_gap).fold(f64::INFINITY, f64::min);
    Ok(OracleReport {
        seed,
        samples,
        successes,
        failures: samples - successes,
        min_gap,
        contradiction: samples > 0 && successes == 0,
        reports,
    })
}
