//! Sparse multivariate polynomials over Q in named symbols.
//!
//! Used to keep operator coefficients opaque so that determinant and
//! characteristic-polynomial identities can be checked as polynomial
//! identities rather than at sample points.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::ring::{format_rational, Rational, Ring};

/// Coefficient families appearing in the quantum multiplication matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// deformation band `a_i`
    A,
    /// degree-one quantum band `b_i`
    B,
    /// degree-two corner `c_1`
    C,
    /// free symbol for tests and ad-hoc use
    X,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Symbol {
    pub family: Family,
    pub index: u32,
}

impl Symbol {
    pub fn a(index: u32) -> Self {
        Symbol { family: Family::A, index }
    }
    pub fn b(index: u32) -> Self {
        Symbol { family: Family::B, index }
    }
    pub fn c(index: u32) -> Self {
        Symbol { family: Family::C, index }
    }
    pub fn x(index: u32) -> Self {
        Symbol { family: Family::X, index }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::X => "x",
        };
        write!(f, "{name}_{}", self.index)
    }
}

/// Sorted list of `(symbol, exponent)` with positive exponents.
pub type Monomial = Vec<(Symbol, u32)>;

fn mono_mul(x: &Monomial, y: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => {
                out.push(x[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(y[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((x[i].0, x[i].1 + y[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&x[i..]);
    out.extend_from_slice(&y[j..]);
    out
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn symbol(s: Symbol) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(s, 1)], Rational::one());
        MPoly { terms }
    }

    pub fn constant(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Vec::new(), q);
        }
        MPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The value when the polynomial has no symbol dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = self.terms.keys().flat_map(|m| m.iter().map(|(s, _)| *s)).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().map(|(_, e)| e).sum()).max().unwrap_or(0)
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Substitutes rational values; symbols absent from `values` are kept.
    pub fn substitute(&self, values: &HashMap<Symbol, Rational>) -> MPoly {
        let mut out = MPoly::default();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(s, e) in m {
                match values.get(&s) {
                    Some(v) => coeff *= Ring::pow(v, e),
                    None => rest.push((s, e)),
                }
            }
            out.insert_term(rest, coeff);
        }
        out
    }

    /// Full evaluation; `None` if some symbol has no value.
    pub fn evaluate(&self, values: &HashMap<Symbol, Rational>) -> Option<Rational> {
        self.substitute(values).as_constant()
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn one() -> Self {
        MPoly::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c);
        }
        out
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = MPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.insert_term(mono_mul(m1, m2), c1 * c2);
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn from_rational(q: &Rational) -> Self {
        MPoly::constant(q.clone())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", format_rational(&mag))?;
            }
            for (i, (s, e)) in m.iter().enumerate() {
                if i > 0 {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "{s}")?;
                } else {
                    write!(f, "{s}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}
