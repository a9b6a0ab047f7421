//! Integer-coefficient helpers behind the rational resultant and gcd.
//!
//! Working over Z avoids a rational gcd on every coefficient operation; the
//! subresultant sequence keeps coefficient growth polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::Rational;

/// Dense integer polynomial, lowest degree first, no trailing zeros.
pub(crate) type ZPoly = Vec<BigInt>;

fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn deg(p: &ZPoly) -> usize {
    p.len() - 1
}

fn content(p: &ZPoly) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Primitive part with positive leading coefficient.
fn primitive(p: &ZPoly) -> ZPoly {
    let mut c = content(p);
    if p.last().is_some_and(Signed::is_negative) {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

/// Writes `f = scale · F` with `F` primitive over Z.
pub(crate) fn split_rational(f: &[Rational]) -> (Rational, ZPoly) {
    let den = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: ZPoly = f.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    trim(&mut ints);
    let c = content(&ints);
    let prim = ints.iter().map(|x| x / &c).collect();
    (Rational::new(c, den), prim)
}

/// Pseudo-remainder: `lc(b)^{deg a − deg b + 1}·a = q·b + r`.
fn prem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = deg(b);
    let lb = &b[db];
    let mut r = a.clone();
    let mut steps = deg(a) + 1 - db;
    while !r.is_empty() && deg(&r) >= db {
        let lr = r[deg(&r)].clone();
        let shift = deg(&r) - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lr * c;
        }
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let m = num_traits::pow(lb.clone(), steps);
        for x in r.iter_mut() {
            *x *= &m;
        }
    }
    r
}

/// Resultant of nonzero integer polynomials by the subresultant algorithm
/// (Collins, Brown–Traub), with the Sylvester sign convention.
pub(crate) fn resultant(a: &ZPoly, b: &ZPoly) -> BigInt {
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign = BigInt::one();
    if deg(&a) < deg(&b) {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if deg(&b) == 0 {
        return sign * num_traits::pow(b[0].clone(), deg(&a));
    }
    let ca = content(&a);
    let cb = content(&b);
    let t = num_traits::pow(ca.clone(), deg(&b)) * num_traits::pow(cb.clone(), deg(&a));
    a = a.iter().map(|x| x / &ca).collect();
    b = b.iter().map(|x| x / &cb).collect();
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = deg(&a) - deg(&b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign = -sign;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return BigInt::zero();
        }
        a = b;
        let div = &g * num_traits::pow(h.clone(), delta);
        b = r.iter().map(|x| x / &div).collect();
        g = a[deg(&a)].clone();
        h = if delta == 0 { h } else { num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1) };
        if deg(&b) == 0 {
            let da = deg(&a);
            let last = num_traits::pow(b[0].clone(), da);
            let h_final = if da == 0 { last * h } else { last / num_traits::pow(h, da - 1) };
            return sign * t * h_final;
        }
    }
}

/// Primitive gcd over Z (positive leading coefficient); `[1]` if coprime.
pub(crate) fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let (mut a, mut b) = (primitive(a), primitive(b));
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = prem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { primitive(&r) };
    }
    a
}
