use rayon::prelude::*;

use ciqh_core::certifier::{certify, Certificate, CertifyError};
use ciqh_core::operator::CompleteIntersection;

/// Nondecreasing degree tuples of length `1..=r_max` with entries in
/// `2..=deg_max`.
fn degree_tuples(deg_max: u32, r_max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = (2..=deg_max).map(|d| vec![d]).collect();
    while let Some(t) = stack.pop() {
        if t.len() < r_max as usize {
            let last = *t.last().expect("nonempty");
            stack.extend((last..=deg_max).map(|d| {
                let mut next = t.clone();
                next.push(d);
                next
            }));
        }
        out.push(t);
    }
    out.sort();
    out
}

/// Every Fano `(n, degrees)` with `1 ≤ n ≤ n_max`, in lexicographic order.
pub fn sweep_cases(n_max: u32, deg_max: u32, r_max: u32) -> Vec<CompleteIntersection> {
    let tuples = degree_tuples(deg_max, r_max);
    (1..=n_max)
        .flat_map(|n| tuples.iter().map(move |d| CompleteIntersection::new(n, d).expect("valid degrees")))
        .filter(CompleteIntersection::is_fano)
        .collect()
}

/// Certifies each case in parallel; the output order matches the input.
pub fn sweep(cases: &[CompleteIntersection]) -> Result<Vec<Certificate>, CertifyError> {
    cases.par_iter().map(certify).collect()
}
