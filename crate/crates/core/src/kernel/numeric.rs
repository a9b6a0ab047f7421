//! High-precision numerical roots of rational polynomials.
//!
//! Multiplicities come from the exact squarefree decomposition; only the
//! squarefree factors are solved numerically, so a repeated root is never
//! mistaken for a tight cluster or vice versa. Each squarefree factor is
//! solved by Aberth's simultaneous iteration: first in `f64` to get seeds,
//! then in fixed-point arithmetic on `BigInt` mantissas at the requested
//! working precision.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use super::poly::{PolyError, UniPoly};
use super::ring::{Rational, Ring};

pub const DEFAULT_DIGITS: u32 = 50;

const MAX_F64_ITERS: usize = 2000;
const MAX_FIXED_ITERS: usize = 400;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumericError {
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("root iteration did not converge for a degree-{degree} factor after {iterations} steps")]
    NonConvergence { degree: usize, iterations: usize },
    #[error("coefficient magnitude exceeds the f64 range used for seeding")]
    Overflow,
}

/// One root approximation, stored as an exact dyadic rational pair.
#[derive(Clone, Debug, PartialEq)]
pub struct RootApprox {
    pub re: Rational,
    pub im: Rational,
    /// Multiplicity from the exact squarefree decomposition.
    pub multiplicity: usize,
    /// A true root of the squarefree factor lies within this distance
    /// (Newton inclusion radius `deg·|p(z)|/|p'(z)|`).
    pub radius: f64,
}

impl RootApprox {
    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

#[derive(Clone, Debug)]
pub struct RootReport {
    /// Distinct roots, each carrying its multiplicity.
    pub roots: Vec<RootApprox>,
    pub degree: usize,
    pub digits: u32,
    /// Exact squarefreeness of the input (discriminant ≠ 0).
    pub squarefree: bool,
    /// Minimum distance between roots counted with multiplicity: zero when
    /// some root is repeated.
    pub min_gap: f64,
    /// `min |zᵢ − zⱼ| − rᵢ − rⱼ`; positive means distinctness is certified
    /// numerically as well.
    pub gap_lower_bound: f64,
}

impl RootReport {
    /// Roots repeated according to multiplicity.
    pub fn all_roots(&self) -> Vec<Complex64> {
        self.roots.iter().flat_map(|r| std::iter::repeat_n(r.to_complex(), r.multiplicity)).collect()
    }
}

pub fn numeric_roots(f: &UniPoly<Rational>, digits: u32) -> Result<RootReport, NumericError> {
    let degree = f.degree().ok_or(PolyError::ZeroPolynomial)?;
    if degree == 0 {
        return Err(NumericError::ConstantPolynomial);
    }
    let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32;
    let factors = f.squarefree_decomposition()?;
    let mut roots = Vec::new();
    for (factor, mult) in &factors {
        for (z, radius) in solve_squarefree(factor, bits)? {
            roots.push(RootApprox { re: z.re_rational(bits), im: z.im_rational(bits), multiplicity: *mult, radius });
        }
    }
    let squarefree = factors.iter().all(|(_, k)| *k == 1);
    let mut min_gap = f64::INFINITY;
    let mut gap_lower_bound = f64::INFINITY;
    for (i, a) in roots.iter().enumerate() {
        if a.multiplicity > 1 {
            min_gap = 0.0;
            gap_lower_bound = gap_lower_bound.min(0.0);
        }
        for b in &roots[i + 1..] {
            let dist = complex_distance(a, b);
            min_gap = min_gap.min(dist);
            gap_lower_bound = gap_lower_bound.min(dist - a.radius - b.radius);
        }
    }
    Ok(RootReport { roots, degree, digits, squarefree, min_gap, gap_lower_bound })
}

fn complex_distance(a: &RootApprox, b: &RootApprox) -> f64 {
    let dr = (&a.re - &b.re).to_f64().unwrap_or(f64::NAN);
    let di = (&a.im - &b.im).to_f64().unwrap_or(f64::NAN);
    dr.hypot(di)
}

/// Fixed-point complex number `(re + i·im) / 2^bits`.
#[derive(Clone, Debug)]
struct Fx {
    re: BigInt,
    im: BigInt,
}

impl Fx {
    fn zero() -> Self {
        Fx { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn from_rational(q: &Rational, bits: u32) -> Self {
        Fx { re: (q.numer() << bits) / q.denom(), im: BigInt::zero() }
    }

    fn from_f64(z: Complex64, bits: u32) -> Self {
        let conv = |x: f64| -> BigInt {
            let r = Rational::from_float(x).unwrap_or_else(<Rational as Ring>::zero);
            (r.numer() << bits) / r.denom()
        };
        Fx { re: conv(z.re), im: conv(z.im) }
    }

    fn add(&self, o: &Fx) -> Fx {
        Fx { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &Fx) -> Fx {
        Fx { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul(&self, o: &Fx, bits: u32) -> Fx {
        Fx { re: (&self.re * &o.re - &self.im * &o.im) >> bits, im: (&self.re * &o.im + &self.im * &o.re) >> bits }
    }

    fn div(&self, o: &Fx, bits: u32) -> Option<Fx> {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            return None;
        }
        let re = (&self.re * &o.re + &self.im * &o.im) << bits;
        let im = (&self.im * &o.re - &self.re * &o.im) << bits;
        Some(Fx { re: re / &den, im: im / den })
    }

    /// |z|² at scale 2^(2·bits).
    fn norm_sqr_raw(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn to_f64(&self, bits: u32) -> Complex64 {
        let s = 2f64.powi(-(bits as i32));
        let conv = |x: &BigInt| -> f64 {
            // shift large mantissas down before converting to avoid overflow
            let extra = x.bits().saturating_sub(1000);
            let v = (x >> extra).to_f64().unwrap_or(f64::NAN);
            v * s * 2f64.powi(extra as i32)
        };
        Complex64::new(conv(&self.re), conv(&self.im))
    }

    fn re_rational(&self, bits: u32) -> Rational {
        Rational::new(self.re.clone(), BigInt::one() << bits)
    }

    fn im_rational(&self, bits: u32) -> Rational {
        Rational::new(self.im.clone(), BigInt::one() << bits)
    }
}

fn solve_squarefree(p: &UniPoly<Rational>, bits: u32) -> Result<Vec<(Fx, f64)>, NumericError> {
    let p = p.make_monic();
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        let z = Fx::from_rational(&-p.coeff(0), bits);
        return Ok(vec![(z, 0.0)]);
    }
    let seeds = aberth_f64(&p)?;
    let coeffs: Vec<Fx> = p.coeffs().iter().map(|c| Fx::from_rational(c, bits)).collect();
    let dcoeffs: Vec<Fx> = p.derivative().coeffs().iter().map(|c| Fx::from_rational(c, bits)).collect();
    let mut z: Vec<Fx> = seeds.into_iter().map(|s| Fx::from_f64(s, bits)).collect();

    // converged once every correction is below 2^(-(bits - 24)) in modulus
    let tol_raw = BigInt::one() << (2 * 24);
    let mut converged = false;
    for _ in 0..MAX_FIXED_ITERS {
        let mut max_ok = true;
        let mut next = z.clone();
        for i in 0..n {
            let pv = horner(&coeffs, &z[i], bits);
            let dv = horner(&dcoeffs, &z[i], bits);
            let ratio = match pv.div(&dv, bits) {
                Some(r) => r,
                None => {
                    max_ok = false;
                    continue;
                }
            };
            let mut sum = Fx::zero();
            for j in 0..n {
                if i != j {
                    if let Some(inv) = unit(bits).div(&z[i].sub(&z[j]), bits) {
                        sum = sum.add(&inv);
                    }
                }
            }
            let denom = unit(bits).sub(&ratio.mul(&sum, bits));
            let w = ratio.div(&denom, bits).unwrap_or(ratio);
            if w.norm_sqr_raw() > tol_raw {
                max_ok = false;
            }
            next[i] = z[i].sub(&w);
        }
        z = next;
        if max_ok {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(NumericError::NonConvergence { degree: n, iterations: MAX_FIXED_ITERS });
    }
    Ok(z.into_iter()
        .map(|zi| {
            let pv = horner(&coeffs, &zi, bits).to_f64(bits).norm();
            let dv = horner(&dcoeffs, &zi, bits).to_f64(bits).norm();
            // evaluation itself is only good to about 2^-bits
            let floor = 2f64.powi(-(bits as i32) + 8);
            let radius = n as f64 * pv.max(floor) / dv;
            (zi, radius)
        })
        .collect())
}

fn unit(bits: u32) -> Fx {
    Fx { re: BigInt::one() << bits, im: BigInt::zero() }
}

fn horner(coeffs: &[Fx], z: &Fx, bits: u32) -> Fx {
    coeffs.iter().rev().fold(Fx::zero(), |acc, c| acc.mul(z, bits).add(c))
}

fn aberth_f64(p: &UniPoly<Rational>) -> Result<Vec<Complex64>, NumericError> {
    let n = p.degree().unwrap();
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(NumericError::Overflow);
    }
    let dcoeffs: Vec<f64> = (1..=n).map(|k| coeffs[k] * k as f64).collect();
    let eval = |cs: &[f64], z: Complex64| cs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c);
    // Fujiwara-style bound on root moduli for the initial circle
    let radius = (0..n).map(|k| coeffs[k].abs().powf(1.0 / (n - k) as f64)).fold(0.0f64, f64::max).max(1e-3) * 2.0;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    for _ in 0..MAX_F64_ITERS {
        let mut done = true;
        for i in 0..n {
            let pv = eval(&coeffs, z[i]);
            let dv = eval(&dcoeffs, z[i]);
            if dv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dv;
            let sum: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::one() - ratio * sum);
            if !w.is_finite() {
                continue;
            }
            if w.norm() > 1e-13 * (1.0 + z[i].norm()) {
                done = false;
            }
            z[i] -= w;
        }
        if done {
            break;
        }
    }
    // polishing in high precision decides convergence; seeds need not be exact
    Ok(z)
}
