//! Square matrices over a commutative ring, with division-free determinant
//! and characteristic polynomial.
//!
//! Nothing here divides: jets with a vanishing constant term are not units,
//! so elimination-based methods are unusable over them.

use std::collections::HashMap;

use thiserror::Error;

use super::poly::UniPoly;
use super::ring::Ring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("row {row} has {len} entries, expected {dim}")]
    Ragged { row: usize, len: usize, dim: usize },
    #[error("dimension {0} exceeds the supported maximum of 64")]
    TooLarge(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

#[derive(Clone, PartialEq, Debug)]
pub struct SquareMatrix<R: Ring> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: Ring> SquareMatrix<R> {
    pub fn zeros(dim: usize) -> Self {
        SquareMatrix { dim, entries: vec![R::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != dim {
                return Err(MatrixError::Ragged { row, len: r.len(), dim });
            }
            entries.extend(r);
        }
        Ok(SquareMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: R) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.dim.max(1))
    }

    /// Positions of all nonzero entries in row-major order.
    pub fn nonzero_positions(&self) -> Vec<(usize, usize)> {
        (0..self.dim)
            .flat_map(|r| (0..self.dim).map(move |c| (r, c)))
            .filter(|&(r, c)| !self.get(r, c).is_zero())
            .collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SquareMatrix<S> {
        SquareMatrix { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.zip_with(rhs, |a, b| a.add_ref(b))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.zip_with(rhs, |a, b| a.sub_ref(b))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Result<Self, MatrixError> {
        if self.dim != rhs.dim {
            return Err(MatrixError::DimensionMismatch(self.dim, rhs.dim));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect();
        Ok(SquareMatrix { dim: self.dim, entries })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.dim != rhs.dim {
            return Err(MatrixError::DimensionMismatch(self.dim, rhs.dim));
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add_ref(&a.mul_ref(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg_ref)
    }

    /// Copy with column `col` replaced by `values`.
    pub fn with_column(&self, col: usize, values: &[R]) -> Self {
        let mut m = self.clone();
        for (r, v) in values.iter().enumerate().take(self.dim) {
            m.set(r, col, v.clone());
        }
        m
    }

    pub fn column(&self, col: usize) -> Vec<R> {
        (0..self.dim).map(|r| self.get(r, col).clone()).collect()
    }

    /// Determinant by memoized expansion along rows.
    ///
    /// State after processing `k` rows is the set of columns already used;
    /// only nonzero entries spawn transitions, so banded matrices of
    /// dimension 20+ stay cheap while dense inputs cost `O(n·2ⁿ)`.
    pub fn det(&self) -> Result<R, MatrixError> {
        let n = self.dim;
        if n > 64 {
            return Err(MatrixError::TooLarge(n));
        }
        if n == 0 {
            return Ok(R::one());
        }
        let mut layer: HashMap<u64, R> = HashMap::new();
        layer.insert(0, R::one());
        for row in 0..n {
            let mut next: HashMap<u64, R> = HashMap::with_capacity(layer.len() * 2);
            let nonzero: Vec<usize> = (0..n).filter(|&c| !self.get(row, c).is_zero()).collect();
            for (mask, acc) in &layer {
                for &c in &nonzero {
                    let bit = 1u64 << c;
                    if mask & bit != 0 {
                        continue;
                    }
                    // inversions added by placing column c after the columns in mask
                    let above = (mask >> c >> 1).count_ones();
                    let mut term = acc.mul_ref(self.get(row, c));
                    if above % 2 == 1 {
                        term = term.neg_ref();
                    }
                    let key = mask | bit;
                    match next.get_mut(&key) {
                        Some(v) => *v = v.add_ref(&term),
                        None => {
                            next.insert(key, term);
                        }
                    }
                }
            }
            next.retain(|_, v| !v.is_zero());
            if next.is_empty() {
                return Ok(R::zero());
            }
            layer = next;
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(layer.remove(&full).unwrap_or_else(R::zero))
    }

    /// `det(λI − M)` by Berkowitz's division-free algorithm.
    pub fn char_poly(&self) -> UniPoly<R> {
        let n = self.dim;
        if n == 0 {
            return UniPoly::constant(R::one());
        }
        // coefficients highest degree first
        let mut vect = vec![R::one(), self.get(0, 0).neg_ref()];
        for r in 1..n {
            let mut toeplitz = Vec::with_capacity(r + 2);
            toeplitz.push(R::one());
            toeplitz.push(self.get(r, r).neg_ref());
            let mut v: Vec<R> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for k in 0..r {
                let dot = (0..r).fold(R::zero(), |acc, j| {
                    let a = self.get(r, j);
                    if a.is_zero() || v[j].is_zero() {
                        acc
                    } else {
                        acc.add_ref(&a.mul_ref(&v[j]))
                    }
                });
                toeplitz.push(dot.neg_ref());
                if k + 1 < r {
                    v = (0..r)
                        .map(|i| {
                            (0..r).fold(R::zero(), |acc, j| {
                                let a = self.get(i, j);
                                if a.is_zero() || v[j].is_zero() {
                                    acc
                                } else {
                                    acc.add_ref(&a.mul_ref(&v[j]))
                                }
                            })
                        })
                        .collect();
                }
            }
            let next: Vec<R> = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r)).fold(R::zero(), |acc, j| {
                        let t = &toeplitz[i - j];
                        if t.is_zero() || vect[j].is_zero() {
                            acc
                        } else {
                            acc.add_ref(&t.mul_ref(&vect[j]))
                        }
                    })
                })
                .collect();
            vect = next;
        }
        vect.reverse();
        UniPoly::new(vect)
    }
}
