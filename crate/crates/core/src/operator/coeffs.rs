use std::collections::HashMap;

use crate::kernel::{MPoly, Rational, Ring, Symbol};

use super::variety::CompleteIntersection;

/// Coefficients of the quantum bands: `a₁ … a_{n−e+3}`, `b₁ … b_e` and the
/// corner `c₁`. Each entry is a polynomial in opaque symbols, so a value may
/// be fully symbolic, pinned to a rational, or anything in between.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffTable {
    a: Vec<MPoly>,
    b: Vec<MPoly>,
    c1: MPoly,
}

impl CoeffTable {
    /// All coefficients opaque, except the forced zeros `a₁ = a_n = 0` when
    /// `e = 3`.
    pub fn symbolic(ci: &CompleteIntersection) -> Self {
        let (n, e) = (ci.n(), ci.e());
        let a_len = (n + 3).saturating_sub(e);
        let a = (1..=a_len)
            .map(|i| if e == 3 && (i == 1 || i == a_len) { MPoly::zero() } else { MPoly::symbol(Symbol::a(i)) })
            .collect();
        let b = (1..=e).map(|i| MPoly::symbol(Symbol::b(i))).collect();
        CoeffTable { a, b, c1: MPoly::symbol(Symbol::c(1)) }
    }

    /// Boundary coefficients pinned to line data: `b₁ = b_e = l₀`,
    /// `a₁ = a_{n−e+3} = l₀` (zero when `e = 3`) and `c₁ = l₀²/2`. Interior
    /// coefficients stay symbolic.
    pub fn beauville(ci: &CompleteIntersection, l0: &Rational) -> Self {
        let mut t = Self::symbolic(ci);
        let l = MPoly::constant(l0.clone());
        if let Some(first) = t.b.first_mut() {
            *first = l.clone();
        }
        if let Some(last) = t.b.last_mut() {
            *last = l.clone();
        }
        if ci.e() != 3 {
            if let Some(first) = t.a.first_mut() {
                *first = l.clone();
            }
            if let Some(last) = t.a.last_mut() {
                *last = l.clone();
            }
        }
        t.c1 = MPoly::constant(l0 * l0 / Rational::from_i64(2));
        t
    }

    /// Replace symbols by rational values wherever a value is given.
    pub fn substitute(&self, values: &HashMap<Symbol, Rational>) -> Self {
        CoeffTable {
            a: self.a.iter().map(|p| p.substitute(values)).collect(),
            b: self.b.iter().map(|p| p.substitute(values)).collect(),
            c1: self.c1.substitute(values),
        }
    }

    /// `a_i`, 1-based.
    pub fn a(&self, i: u32) -> MPoly {
        self.a.get(i as usize - 1).cloned().unwrap_or_else(MPoly::zero)
    }

    /// `b_i`, 1-based.
    pub fn b(&self, i: u32) -> MPoly {
        self.b.get(i as usize - 1).cloned().unwrap_or_else(MPoly::zero)
    }

    pub fn c1(&self) -> &MPoly {
        &self.c1
    }

    pub fn a_len(&self) -> u32 {
        self.a.len() as u32
    }

    pub fn b_len(&self) -> u32 {
        self.b.len() as u32
    }

    /// `b₁ + … + b_e`.
    pub fn b_sum(&self) -> MPoly {
        self.b.iter().fold(MPoly::zero(), |acc, b| acc.add_ref(b))
    }

    /// Symbols still unpinned, in sorted order.
    pub fn free_symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> =
            self.a.iter().chain(&self.b).chain(std::iter::once(&self.c1)).flat_map(MPoly::symbols).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Whether every coefficient is a rational constant.
    pub fn is_numeric(&self) -> bool {
        self.free_symbols().is_empty()
    }
}
