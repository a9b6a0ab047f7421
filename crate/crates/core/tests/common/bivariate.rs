//! Dense monomial arithmetic on G(2,N) that never forms a Schur product.
//!
//! For a symmetric polynomial P(x₁, x₂) of degree 2(N−2) in the Chern roots
//! of the dual tautological bundle, ∫ P equals the coefficient of
//! x₁^{N−1} x₂^{N−2} in (x₁ − x₂)·P.

use num_bigint::BigInt;
use num_traits::Zero;

/// Dense bivariate polynomial, `c[i][j]` is the coefficient of x₁^i x₂^j.
#[derive(Clone)]
pub struct Bivariate(pub Vec<Vec<BigInt>>);

impl Bivariate {
    pub fn one() -> Self {
        Bivariate(vec![vec![BigInt::from(1)]])
    }

    pub fn linear(p: i64, q: i64) -> Self {
        Bivariate(vec![vec![BigInt::zero(), BigInt::from(q)], vec![BigInt::from(p), BigInt::zero()]])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let rows = self.0.len() + o.0.len() - 1;
        let cols = self.0[0].len() + o.0[0].len() - 1;
        let mut out = vec![vec![BigInt::zero(); cols]; rows];
        for (i, r) in self.0.iter().enumerate() {
            for (j, a) in r.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, s) in o.0.iter().enumerate() {
                    for (l, b) in s.iter().enumerate() {
                        out[i + k][j + l] += a * b;
                    }
                }
            }
        }
        Bivariate(out)
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.0.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// h_c(x₁, x₂) = Σ x₁^i x₂^{c−i}, the class of lines meeting a
    /// codimension-(c+1) linear space.
    pub fn complete(c: usize) -> Self {
        let mut out = vec![vec![BigInt::zero(); c + 1]; c + 1];
        for i in 0..=c {
            out[i][c - i] = BigInt::from(1);
        }
        Bivariate(out)
    }

    /// Schur polynomial s_(a,b) = (x₁x₂)^b · h_{a−b}.
    pub fn schur(a: usize, b: usize) -> Self {
        (0..b).fold(Self::complete(a - b), |acc, _| acc.mul(&Self::linear(0, 1)).mul(&Self::linear(1, 0)))
    }

    /// ∏_{k=0}^{d} (k x₁ + (d−k) x₂)
    pub fn top_chern(d: i64) -> Self {
        (0..=d).fold(Self::one(), |acc, k| acc.mul(&Self::linear(k, d - k)))
    }
}

pub fn oracle_integral(p: &Bivariate, big_n: usize) -> BigInt {
    let anti = p.mul(&Bivariate::linear(1, -1));
    anti.get(big_n - 1, big_n - 2)
}
