//! Schubert calculus on the Grassmannian G(2,N) of lines in P^{N−1}, and
//! the line counts built from it.
//!
//! Classes are integer combinations of Schur polynomials `s_(a,b)` in the two
//! Chern roots of the dual tautological bundle. In two variables
//! `s_(a,b) = (x₁x₂)^b · h_{a−b}` and `h_p h_q = Σ_{i ≤ min(p,q)} s_(p+q−i, i)`,
//! which is all of Littlewood–Richardson that is needed here. The cohomology
//! ring is the quotient by the span of `s_(a,b)` with `a > N − 2`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kernel::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchubertError {
    #[error("Grassmannian mismatch: G(2,{0}) vs G(2,{1})")]
    AmbientMismatch(u32, u32),
    #[error("G(2,{0}) needs N >= 2")]
    AmbientTooSmall(u32),
    #[error("Schubert index ({a},{b}) is not a partition inside the 2 x {max} box")]
    InvalidIndex { a: u32, b: u32, max: u32 },
    #[error("line invariant l_{j} undefined for n={n}, e={e}: Schubert index out of range")]
    InvalidLineIndex { n: u32, e: u32, j: u32 },
    #[error("line counts need n >= 1 and at least one defining degree >= 1")]
    InvalidVariety,
}

/// Partition `(a, b)` with `a ≥ b ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SchurIndex {
    pub a: u32,
    pub b: u32,
}

impl SchurIndex {
    pub fn new(a: u32, b: u32) -> Option<Self> {
        (a >= b).then_some(SchurIndex { a, b })
    }

    /// Complex codimension `a + b`.
    pub fn degree(&self) -> u32 {
        self.a + self.b
    }

    /// Poincaré dual index in G(2,N).
    pub fn dual(&self, big_n: u32) -> SchurIndex {
        SchurIndex { a: big_n - 2 - self.b, b: big_n - 2 - self.a }
    }
}

impl fmt::Display for SchurIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            write!(f, "σ{}", self.a)
        } else {
            write!(f, "σ{},{}", self.a, self.b)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannClass {
    big_n: u32,
    terms: BTreeMap<SchurIndex, BigInt>,
}

impl GrassmannClass {
    pub fn zero(big_n: u32) -> Self {
        GrassmannClass { big_n, terms: BTreeMap::new() }
    }

    pub fn one(big_n: u32) -> Self {
        let mut c = Self::zero(big_n);
        c.terms.insert(SchurIndex { a: 0, b: 0 }, BigInt::one());
        c
    }

    pub fn sigma(big_n: u32, a: u32, b: u32) -> Result<Self, SchubertError> {
        if big_n < 2 {
            return Err(SchubertError::AmbientTooSmall(big_n));
        }
        if a < b || a > big_n - 2 {
            return Err(SchubertError::InvalidIndex { a, b, max: big_n - 2 });
        }
        let mut c = Self::zero(big_n);
        c.terms.insert(SchurIndex { a, b }, BigInt::one());
        Ok(c)
    }

    /// Special class `σ_c`: lines meeting a linear space of codimension `c+1`.
    pub fn special(big_n: u32, c: u32) -> Result<Self, SchubertError> {
        Self::sigma(big_n, c, 0)
    }

    pub fn ambient(&self) -> u32 {
        self.big_n
    }

    pub fn terms(&self) -> &BTreeMap<SchurIndex, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&SchurIndex { a, b }).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Degrees `a + b` of the terms present.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(SchurIndex::degree).collect();
        d.sort();
        d.dedup();
        d
    }

    fn add_term(&mut self, idx: SchurIndex, c: BigInt) {
        if c.is_zero() || idx.a > self.big_n - 2 {
            return;
        }
        let slot = self.terms.entry(idx).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SchubertError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.big_n);
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    fn check_ambient(&self, other: &Self) -> Result<(), SchubertError> {
        if self.big_n != other.big_n {
            return Err(SchubertError::AmbientMismatch(self.big_n, other.big_n));
        }
        Ok(())
    }

    /// Cup product, truncated to G(2,N).
    pub fn pieri_product(&self, other: &Self) -> Result<Self, SchubertError> {
        self.check_ambient(other)?;
        let mut out = Self::zero(self.big_n);
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let coeff = cx * cy;
                let shift = x.b + y.b;
                let (p, q) = (x.a - x.b, y.a - y.b);
                for i in 0..=p.min(q) {
                    out.add_term(SchurIndex { a: p + q - i + shift, b: i + shift }, coeff.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.big_n), |acc, _| acc.pieri_product(self).expect("same ambient"))
    }

    /// Degree of the top-dimensional part: coefficient of the point class
    /// `σ_(N−2,N−2)`.
    pub fn integrate(&self) -> BigInt {
        let top = self.big_n - 2;
        self.coeff(top, top)
    }
}

impl fmt::Display for GrassmannClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if v.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "{v}·{k}")?;
            }
        }
        Ok(())
    }
}

/// Top Chern class of `Sym^d S*` on G(2,N): the class of lines contained
/// in a degree-`d` hypersurface, `∏_{k=0}^{d} (k x₁ + (d−k) x₂)`.
///
/// The symmetric polynomial is converted to the Schur basis through the
/// bialternant: the coefficient of `s_(a,b)` is the coefficient of
/// `x₁^{a+1} x₂^b` in `(x₁ − x₂)·P`.
pub fn top_chern_sym(d: u32, big_n: u32) -> GrassmannClass {
    let deg = d as usize + 1;
    // monomial coefficients: mono[i] multiplies x1^i x2^(deg - i)
    let mut mono = vec![BigInt::one()];
    for k in 0..=d {
        let (p, q) = (BigInt::from(k), BigInt::from(d - k));
        let mut next = vec![BigInt::zero(); mono.len() + 1];
        for (i, c) in mono.iter().enumerate() {
            next[i + 1] += c * &p;
            next[i] += c * &q;
        }
        mono = next;
    }
    // (x1 - x2) * P: coefficient of x1^(i+1) x2^(deg - i) is mono[i] - mono[i+1]
    let mut out = GrassmannClass::zero(big_n);
    for b in 0..=deg / 2 {
        let a = deg - b;
        let upper = mono.get(a).cloned().unwrap_or_else(BigInt::zero);
        let lower = mono.get(a + 1).cloned().unwrap_or_else(BigInt::zero);
        // coefficient of x1^(a+1) x2^b in (x1 - x2)P = mono[a] - mono[a+1]
        out.add_term(SchurIndex { a: a as u32, b: b as u32 }, upper - lower);
    }
    out
}

/// `d·l_j` and `l_j` for one index `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineInvariant {
    pub j: u32,
    /// Number of lines on V meeting two general linear spaces of
    /// codimensions `n−j` and `n+1−e+j`.
    pub count: BigInt,
    /// `count / d`.
    pub value: Rational,
}

/// `e = 1 + Σ(dᵢ − 1)`.
pub fn index_e(degrees: &[u32]) -> u32 {
    1 + degrees.iter().map(|d| d.saturating_sub(1)).sum::<u32>()
}

/// Schubert indices `(n−j−1, n−e+j)` of the two incidence conditions, or
/// `None` when one of them leaves the 2 × (N−2) box.
fn incidence_indices(n: u32, degrees: &[u32], j: u32) -> Option<(u32, u32)> {
    let e = index_e(degrees);
    let max = n + degrees.len() as u32 - 1;
    let first = n.checked_sub(j + 1)?;
    let second = (n + j).checked_sub(e)?;
    (first <= max && second <= max).then_some((first, second))
}

/// Counts lines on a general complete intersection of the given degrees in
/// P^{n+r}. Degrees equal to one are allowed and behave as linear sections.
pub fn line_invariant(n: u32, degrees: &[u32], j: u32) -> Result<LineInvariant, SchubertError> {
    if n == 0 || degrees.is_empty() || degrees.contains(&0) {
        return Err(SchubertError::InvalidVariety);
    }
    let e = index_e(degrees);
    let (first, second) = incidence_indices(n, degrees, j).ok_or(SchubertError::InvalidLineIndex { n, e, j })?;
    let big_n = n + degrees.len() as u32 + 1;
    let mut class = GrassmannClass::special(big_n, first)?;
    class = class.pieri_product(&GrassmannClass::special(big_n, second)?)?;
    for &d in degrees {
        class = class.pieri_product(&top_chern_sym(d, big_n))?;
    }
    let count = class.integrate();
    let d: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    let value = Rational::new(count.clone(), d);
    Ok(LineInvariant { j, count, value })
}

/// All defined `l_j` for a complete intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineInvariantTable {
    pub n: u32,
    pub degrees: Vec<u32>,
    pub entries: BTreeMap<u32, LineInvariant>,
}

impl LineInvariantTable {
    pub fn compute(n: u32, degrees: &[u32]) -> Result<Self, SchubertError> {
        let mut entries = BTreeMap::new();
        for j in 0..n {
            if incidence_indices(n, degrees, j).is_some() {
                entries.insert(j, line_invariant(n, degrees, j)?);
            }
        }
        Ok(LineInvariantTable { n, degrees: degrees.to_vec(), entries })
    }

    pub fn l(&self, j: u32) -> Option<&Rational> {
        self.entries.get(&j).map(|x| &x.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u32, a: u32, b: u32) -> GrassmannClass {
        GrassmannClass::sigma(n, a, b).unwrap()
    }

    #[test]
    fn pieri_in_g24() {
        let sq = s(4, 1, 0).pieri_product(&s(4, 1, 0)).unwrap();
        assert_eq!(sq, s(4, 2, 0).add(&s(4, 1, 1)).unwrap());
        assert_eq!(s(4, 1, 0).pow(4).integrate(), BigInt::from(2));
    }

    #[test]
    fn sigma2_squared_in_g25() {
        // h2·h2 = s(4,0) + s(3,1) + s(2,2); s(4,0) dies in G(2,5)
        let sq = s(5, 2, 0).pieri_product(&s(5, 2, 0)).unwrap();
        assert_eq!(sq, s(5, 3, 1).add(&s(5, 2, 2)).unwrap());
        // in a large Grassmannian the σ4 term survives
        let big = s(8, 2, 0).pieri_product(&s(8, 2, 0)).unwrap();
        assert_eq!(big.coeff(4, 0), BigInt::one());
    }

    #[test]
    fn integrate_edge_cases() {
        assert_eq!(s(6, 4, 4).integrate(), BigInt::one());
        assert_eq!(GrassmannClass::one(4).integrate(), BigInt::zero());
    }

    #[test]
    fn top_chern_of_linear_factor_is_sigma11() {
        assert_eq!(top_chern_sym(1, 5), s(5, 1, 1));
        let c = top_chern_sym(4, 9);
        assert_eq!(c.degrees(), vec![5]);
        assert!(c.is_nonnegative());
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(GrassmannClass::sigma(4, 3, 0), Err(SchubertError::InvalidIndex { .. })));
        assert!(matches!(GrassmannClass::sigma(4, 1, 2), Err(SchubertError::InvalidIndex { .. })));
        assert_eq!(s(4, 1, 0).pieri_product(&s(5, 1, 0)), Err(SchubertError::AmbientMismatch(4, 5)));
        assert!(matches!(line_invariant(4, &[3], 9), Err(SchubertError::InvalidLineIndex { .. })));
    }

    #[test]
    fn linear_factors_behave_as_sections() {
        for j in 0..3 {
            let plain = line_invariant(5, &[3], j).unwrap();
            let padded = line_invariant(5, &[3, 1], j).unwrap();
            assert_eq!(plain.count, padded.count);
        }
    }

    #[test]
    fn cubic_fourfold_line_counts() {
        let l0 = line_invariant(4, &[3], 0).unwrap();
        assert!(l0.count > BigInt::zero());
        assert_eq!(l0.value, Rational::new(l0.count.clone(), BigInt::from(3)));
    }
}
