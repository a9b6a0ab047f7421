//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if any criterion fails.

#[allow(dead_code)]
#[path = "../../core/tests/common/bivariate.rs"]
mod bivariate;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use bivariate::{oracle_integral, Bivariate};
use ciqh_cli::{sweep, sweep_cases};
use ciqh_core::certifier::{
    certify, lemma1_criterion, lemma2_root_structure, numeric_oracle, Certificate, Lemma1Outcome, OriginEvidence,
    Verdict,
};
use ciqh_core::kernel::{int, numeric_roots, rat, Jet, MPoly, Rational, Ring, Symbol, UniPoly, DEFAULT_DIGITS};
use ciqh_core::operator::{
    build_a, det_linear_coeff, insertion_constraint_solutions, origin_operator, CoeffTable, CompleteIntersection,
    ConstraintSolution,
};
use ciqh_core::schubert::{line_invariant, top_chern_sym, GrassmannClass, LineInvariantTable, SchurIndex};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

/// Fano cases of the sweep box: `n ≤ 20`, `2 ≤ dᵢ ≤ 5`, `r ≤ 3`.
fn fano_cases() -> Vec<CompleteIntersection> {
    sweep_cases(20, 5, 3)
}

/// The acceptance sweep proper: Fano, `n ≥ 3` and `n > 2e − 3`.
fn admissible_cases() -> Vec<CompleteIntersection> {
    fano_cases().into_iter().filter(|c| c.n() >= 3 && c.degree_condition()).collect()
}

/// Admissible cases that carry a deformation, `e ≥ 3`.
fn operator_cases() -> Vec<CompleteIntersection> {
    admissible_cases().into_iter().filter(|c| c.e() >= 3).collect()
}

fn sign(k: u32) -> Rational {
    int(if k.is_multiple_of(2) { 1 } else { -1 })
}

fn sym(s: Symbol) -> MPoly {
    MPoly::symbol(s)
}

fn criterion_1() -> Outcome {
    let cases = admissible_cases();
    for c in &cases {
        let (n, e) = (c.n() as usize, c.e() as usize);
        let b_sum = (1..=c.e()).fold(MPoly::zero(), |acc, i| acc.add_ref(&sym(Symbol::b(i))));
        let expected = UniPoly::monomial(MPoly::one(), n + 1).sub_ref(&UniPoly::monomial(b_sum, e - 1));
        let coeffs = CoeffTable::symbolic(c);
        let at_origin = if e >= 3 {
            build_a(c, &coeffs).map_err(|x| x.to_string())?.char_poly().map(|j: &Jet<MPoly>| j.constant_part().clone())
        } else {
            origin_operator(c, &coeffs).map_err(|x| x.to_string())?.char_poly()
        };
        ensure!(at_origin == expected, "{c}: G(λ,0) is not λ^(n+1) - Σb·λ^(e-1)");

        let constant: BigInt = c.degrees().iter().map(|&d| BigInt::from(d).pow(d)).product();
        let mut coeffs = vec![int(0); n + 2];
        coeffs[n + 1] = int(1);
        coeffs[e - 1] = -Rational::from_integer(constant);
        let cert = certify(c).map_err(|x| x.to_string())?;
        ensure!(cert.charpoly_origin_poly() == Some(UniPoly::new(coeffs)), "{c}: specialized origin polynomial");
    }
    let spot = |n, d: &[u32]| certify(&CompleteIntersection::new(n, d).unwrap()).unwrap().charpoly_origin_poly();
    ensure!(spot(5, &[3]) == Some(UniPoly::from_i64s(&[0, 0, -27, 0, 0, 0, 1])), "λ⁶ − 27λ² spot value");
    ensure!(spot(6, &[2, 2]) == Some(UniPoly::from_i64s(&[0, 0, -16, 0, 0, 0, 0, 1])), "λ⁷ − 16λ² spot value");
    Ok(format!("{} cases", cases.len()))
}

fn criterion_2() -> Outcome {
    let cases = operator_cases();
    for c in &cases {
        let (n, e) = (c.n(), c.e());
        let inv = c.delta().unwrap().recip();
        let a_star = &inv - int(1);
        let c_star = &inv + &inv - int(1);
        let last = n + 3 - e;
        let boundary_a = |i: u32| if e == 3 { MPoly::zero() } else { sym(Symbol::a(i)) };
        let a1 = boundary_a(1).scale(&a_star);
        let a_last = boundary_a(last).scale(&a_star);
        let (b1, be) = (sym(Symbol::b(1)), sym(Symbol::b(e)));
        let c1 = sym(Symbol::c(1)).scale(&c_star);
        let bracket =
            c1.sub_ref(&a1.mul_ref(&be)).sub_ref(&a_last.mul_ref(&b1)).sub_ref(&b1.mul_ref(&be)).scale(&sign(n));
        let first = c1.sub_ref(&a1.mul_ref(&be)).scale(&sign(n));
        let second = b1.mul_ref(&a_last.add_ref(&be)).scale(&sign(n + 1));

        let a = build_a(c, &CoeffTable::symbolic(c)).map_err(|x| x.to_string())?;
        let exp = det_linear_coeff(&a).map_err(|x| x.to_string())?;
        ensure!(exp.linear() == bracket, "{c}: t-coefficient of det A(t) differs from the bracket");
        for (i, term) in exp.column_terms.iter().enumerate() {
            let expected = match i {
                0 => &first,
                i if i == (n + 2 - e) as usize => &second,
                _ => &MPoly::zero(),
            };
            ensure!(term == expected, "{c}: column {i} derivative determinant");
        }
    }
    Ok(format!("{} symbolic identities", cases.len()))
}

fn criterion_3() -> Outcome {
    let certs: Vec<Certificate> = sweep(&fano_cases()).map_err(|x| x.to_string())?;
    let mut counts = std::collections::BTreeMap::new();
    for cert in &certs {
        let (n, e) = (cert.input.n, cert.e);
        let c = CompleteIntersection::new(n, &cert.input.degrees).unwrap();
        let expected = if n < 3 || !c.degree_condition() {
            Verdict::HypothesisFail
        } else if e <= 2 {
            Verdict::SemisimpleAtOrigin
        } else if (n, e) == (7, 3) {
            Verdict::InconclusiveException
        } else {
            Verdict::CertifiedGenericSemisimple
        };
        ensure!(cert.verdict == expected, "{c}: verdict {} expected {expected}", cert.verdict);
        *counts.entry(cert.verdict).or_insert(0) += 1;
        if n >= 3 && e >= 3 && c.degree_condition() {
            let l0 = cert.l0_value().ok_or(format!("{c}: no l0"))?;
            let l2 = &l0 * &l0;
            let closed = if e == 3 {
                sign(n) * (rat(n as i64 - 1, n as i64 - 3) - rat(3, 2)) * l2
            } else {
                sign(n + 1) * (c.delta().unwrap().recip() - rat(1, 2)) * l2
            };
            let got = cert.det_linear_value().ok_or(format!("{c}: no det-linear coefficient"))?;
            ensure!(got == closed, "{c}: det-linear {got} vs closed form {closed}");
            ensure!(got.is_zero() == ((n, e) == (7, 3)), "{c}: vanishing pattern");
        }
    }
    let summary: Vec<String> = counts.iter().map(|(v, k)| format!("{k} {v}")).collect();
    Ok(summary.join(", "))
}

fn criterion_4() -> Outcome {
    let pairs: BTreeSet<(u32, u32)> = operator_cases().iter().map(|c| (c.n(), c.e())).collect();
    for &(n, e) in &pairs {
        let sol = |k, s| ConstraintSolution { k, index_sum: s };
        let got0 = insertion_constraint_solutions(n, e, 0).map_err(|x| x.to_string())?;
        let got1 = insertion_constraint_solutions(n, e, 1).map_err(|x| x.to_string())?;
        ensure!(got0 == vec![sol(1, e + 1)], "n={n} e={e}: k_w=0 gives {got0:?}");
        ensure!(got1 == vec![sol(1, n - e + 4), sol(2, 2)], "n={n} e={e}: k_w=1 gives {got1:?}");
        for (k_w, got) in [(0i64, &got0), (1, &got1)] {
            let (n_i, e_i) = (n as i64, e as i64);
            let mut brute = BTreeSet::new();
            for k in 1..=4i64 {
                for j in 1..n_i {
                    for m in 1..n_i {
                        let lhs = (n_i - j) + (n_i - m) + k_w * (n_i - (2 * e_i - 3));
                        if lhs == (n_i + 2 - e_i) * k + n_i - 3 {
                            brute.insert(sol(k as u32, (j + m) as u32));
                        }
                    }
                }
            }
            ensure!(brute.into_iter().collect::<Vec<_>>() == *got, "n={n} e={e} k_w={k_w}: brute force disagrees");
        }
    }
    Ok(format!("{} (n, e) pairs", pairs.len()))
}

fn criterion_5() -> Outcome {
    let s1 = Bivariate::complete(1);
    let oracle = [
        oracle_integral(&s1.mul(&s1).mul(&s1).mul(&s1), 4),
        oracle_integral(&Bivariate::top_chern(3), 4),
        oracle_integral(&Bivariate::top_chern(5), 5),
    ];
    let ring = [
        GrassmannClass::sigma(4, 1, 0).unwrap().pow(4).integrate(),
        top_chern_sym(3, 4).integrate(),
        top_chern_sym(5, 5).integrate(),
    ];
    let golden = [2, 27, 2875].map(BigInt::from);
    ensure!(oracle == golden, "oracle gives {oracle:?}");
    ensure!(ring == golden, "Schur ring gives {ring:?}");
    Ok("2, 27, 2875".into())
}

fn criterion_6() -> Outcome {
    let cases = admissible_cases();
    let mut invariants = 0;
    for c in &cases {
        let l = line_invariant(c.n(), c.degrees(), 0).map_err(|x| format!("{c}: {x}"))?;
        ensure!(l.count >= BigInt::from(0), "{c}: negative line count");
        ensure!(
            Rational::from_integer(l.count.clone()) == l.value.clone() * Rational::from_integer(c.degree()),
            "{c}: d·l0"
        );
        ensure!(l.value > int(0), "{c}: l0 = {} is not positive", l.value);
        let table = LineInvariantTable::compute(c.n(), c.degrees()).map_err(|x| format!("{c}: {x}"))?;
        for (j, lj) in &table.entries {
            ensure!(lj.count >= BigInt::from(0), "{c}: d·l{j} = {} is negative", lj.count);
        }
        invariants += table.entries.len();
    }
    let mut pairs = 0;
    for big_n in 2..=8u32 {
        let idx: Vec<(u32, u32)> = (0..=big_n - 2).flat_map(|a| (0..=a).map(move |b| (a, b))).collect();
        for &x in &idx {
            for &y in &idx {
                let p = GrassmannClass::sigma(big_n, x.0, x.1)
                    .unwrap()
                    .pieri_product(&GrassmannClass::sigma(big_n, y.0, y.1).unwrap());
                let dual = SchurIndex::new(x.0, x.1).unwrap().dual(big_n);
                let expected = BigInt::from(u8::from((dual.a, dual.b) == y));
                ensure!(p.map_err(|e| e.to_string())?.integrate() == expected, "pairing N={big_n} {x:?} {y:?}");
                pairs += 1;
            }
        }
    }
    Ok(format!("{invariants} line invariants over {} cases, {pairs} pairings", cases.len()))
}

fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> UniPoly {
    UniPoly::new((0..=deg).map(|_| int(rng.gen_range(-6..=6))).collect())
}

fn criterion_7() -> Outcome {
    // fixtures: y² − z, y², y² − z² (z² vanishes at first order)
    let ev = OriginEvidence::new(UniPoly::from_i64s(&[0, 0, 1])).map_err(|x| x.to_string())?;
    let z = Jet::linear_in_t(int(0), int(1));
    let y2 = |c0: Jet| UniPoly::new(vec![c0, Jet::zero(), Jet::one()]);
    let fixtures = [
        (y2(z.neg_ref()), Lemma1Outcome::GenericDistinct),
        (y2(Jet::zero()), Lemma1Outcome::Inconclusive),
        (y2(z.mul_ref(&z).neg_ref()), Lemma1Outcome::Inconclusive),
    ];
    for (i, (g, want)) in fixtures.iter().enumerate() {
        ensure!(lemma1_criterion(g, Some(&ev)).map_err(|x| x.to_string())? == *want, "fixture {i}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut polys, mut draws, mut distinct) = (0u32, 0u32, 0u32);
    while polys < 200 {
        let m = rng.gen_range(2..=3);
        let hd = rng.gen_range(1..=3);
        let h = random_poly(&mut rng, hd);
        let h = h.add_ref(&UniPoly::monomial(int(1), h.degree().unwrap_or(0) + 1));
        if h.coeff(0).is_zero() || !h.is_squarefree() {
            continue;
        }
        let g0 = UniPoly::monomial(int(1), m).mul_ref(&h);
        let g1 = random_poly(&mut rng, g0.degree().unwrap() - 1);
        if g1.coeff(0).is_zero() {
            continue;
        }
        let g = UniPoly::new((0..=g0.degree().unwrap()).map(|k| Jet::linear_in_t(g0.coeff(k), g1.coeff(k))).collect());
        let ev = OriginEvidence::new(g0.clone()).map_err(|x| x.to_string())?;
        if lemma1_criterion(&g, Some(&ev)).map_err(|x| x.to_string())? != Lemma1Outcome::GenericDistinct {
            return Err(format!("criterion inconclusive on g0={g0:?} g1={g1:?}"));
        }
        polys += 1;
        let mut accepted = 0;
        while accepted < 100 {
            let t = rat(rng.gen_range(1..=50) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(100..=10_000));
            draws += 1;
            if g0.add_ref(&g1.scale(&t)).discriminant().map_err(|x| x.to_string())?.is_zero() {
                eprintln!("  repeated root at t={t}; redrawing");
            } else {
                distinct += 1;
                accepted += 1;
            }
        }
    }
    let rate = distinct as f64 / draws as f64;
    ensure!(rate >= 0.99, "only {distinct}/{draws} draws had distinct roots");

    let cases = admissible_cases();
    for c in &cases {
        let s = lemma2_root_structure(c.n(), c.e(), &c.origin_constant_rational()).map_err(|x| format!("{c}: {x}"))?;
        ensure!(s.gcd_degree == c.e().max(2) - 2, "{c}: gcd degree {}", s.gcd_degree);
    }
    Ok(format!("3 fixtures, {distinct}/{draws} distinct draws, {} root structures", cases.len()))
}

fn criterion_8() -> Outcome {
    let certified: Vec<CompleteIntersection> =
        operator_cases().into_iter().filter(|c| (c.n(), c.e()) != (7, 3)).collect();
    let step = certified.len() / 10;
    let chosen: Vec<_> = (0..10).map(|i| certified[i * step].clone()).collect();
    let mut samples = 0;
    let mut min_gap = f64::INFINITY;
    for c in &chosen {
        for seed in 0..20u64 {
            let report = numeric_oracle(c, 1, seed).map_err(|x| format!("{c}: {x}"))?;
            for r in &report.reports {
                ensure!(r.discriminant_nonzero, "{c} seed {seed}: zero discriminant");
                ensure!(r.min_gap > 1e-8, "{c} seed {seed}: gap {}", r.min_gap);
                min_gap = min_gap.min(r.min_gap);
                samples += 1;
            }
        }
    }
    let quadric = CompleteIntersection::new(4, &[2]).unwrap();
    let g = certify(&quadric).map_err(|x| x.to_string())?.charpoly_origin_poly().ok_or("no origin polynomial")?;
    let gap = numeric_roots(&g, DEFAULT_DIGITS).map_err(|x| x.to_string())?.min_gap;
    let root2 = std::f64::consts::SQRT_2;
    ensure!(((gap - root2) / root2).abs() < 5e-11, "quadric fourfold gap {gap}");
    let names: Vec<String> = chosen.iter().map(ToString::to_string).collect();
    Ok(format!("{samples} samples over [{}], min gap {min_gap:.3e}; quadric gap {gap:.12}", names.join("; ")))
}

fn criterion_9() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_ciqh"))
            .args(["sweep", "--n-max", "20", "--deg-max", "5", "--r-max", "3", "--csv"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure!(a.status.success() && b.status.success(), "sweep exited with {} / {}", a.status, b.status);
    ensure!(a.stdout == b.stdout, "CSV output differs between runs");
    let text = String::from_utf8(a.stdout).map_err(|e| e.to_string())?;
    ensure!(text.starts_with("n,degrees,r,d,e,delta,l0,det_linear_coeff,verdict\n"), "unexpected header");
    Ok(format!("{} bytes, {} rows identical", text.len(), text.lines().count() - 1))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("origin characteristic polynomial", criterion_1),
        ("determinant bracket", criterion_2),
        ("closed forms and exception", criterion_3),
        ("constraint enumerator", criterion_4),
        ("Schubert golden numbers", criterion_5),
        ("line-invariant sanity", criterion_6),
        ("lemma suites", criterion_7),
        ("oracle consistency", criterion_8),
        ("sweep determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {secs:.1} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why}; {secs:.1} s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
