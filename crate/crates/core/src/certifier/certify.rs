use serde::{Deserialize, Serialize};

use crate::json::RationalJson;
use crate::kernel::{format_rational, MPoly, Rational, Ring, UniPoly};
use crate::operator::{
    bracket, build_a, char_poly_g, closed_form, closed_form_text, det_linear_coeff, first_column_term,
    last_column_term, last_contributing_column, origin_operator, CoeffTable, CompleteIntersection,
};
use crate::schubert::line_invariant;

use super::lemmas::{
    lemma1_criterion, lemma2_root_structure, origin_polynomial, Lemma1Outcome, OriginEvidence, RootStructure,
};
use super::oracle::OracleReport;
use super::CertifyError;

pub const ASSUMPTION_LINE_VARIETY: &str = "the variety of lines on V has the expected dimension (V general)";
pub const ASSUMPTION_ORIGIN_IDENTITY: &str =
    "G(lambda,0) = lambda^(n+1) - d_1^d_1...d_r^d_r lambda^(e-1) for e < n+1, n >= 3 (imported)";
pub const ASSUMPTION_OPENNESS: &str =
    "distinct roots along the t_(2e-3) line extend to generic w because semi-simplicity is an open condition";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    CertifiedGenericSemisimple,
    SemisimpleAtOrigin,
    InconclusiveException,
    HypothesisFail,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::CertifiedGenericSemisimple => "CERTIFIED_GENERIC_SEMISIMPLE",
            Verdict::SemisimpleAtOrigin => "SEMISIMPLE_AT_ORIGIN",
            Verdict::InconclusiveException => "INCONCLUSIVE_EXCEPTION",
            Verdict::HypothesisFail => "HYPOTHESIS_FAIL",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypotheses {
    pub n_ok: bool,
    pub fano_ok: bool,
    pub degree_ok: bool,
    pub exception_hit: bool,
    pub small_e: bool,
    /// `None` when line data was not needed.
    pub l0_positive: Option<bool>,
}

impl Hypotheses {
    pub fn of(ci: &CompleteIntersection) -> Self {
        let (n, e) = (ci.n(), ci.e());
        Hypotheses {
            n_ok: n >= 3,
            fano_ok: ci.is_fano(),
            degree_ok: ci.degree_condition(),
            exception_hit: n == 7 && e == 3,
            small_e: e <= 2,
            l0_positive: None,
        }
    }

    /// Names of the flags that block a verdict.
    pub fn failing(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.n_ok {
            out.push("n_ok".to_string());
        }
        if !self.fano_ok {
            out.push("fano_ok".to_string());
        }
        if !self.degree_ok {
            out.push("degree_ok".to_string());
        }
        if self.l0_positive == Some(false) {
            out.push("l0_positive".to_string());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateInput {
    pub n: u32,
    /// Normalized degrees, each at least 2.
    pub degrees: Vec<u32>,
    pub dropped_linear: u32,
    pub r: u32,
    /// `∏ dᵢ` as a decimal string.
    pub d: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetLinearJson {
    pub num: String,
    pub den: String,
    pub formula: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub input: CertificateInput,
    pub hypotheses: Hypotheses,
    pub e: u32,
    pub delta: Option<RationalJson>,
    pub l0: Option<RationalJson>,
    /// `d·l₀`, the raw line count.
    pub line_count: Option<String>,
    pub det_linear_coeff: Option<DetLinearJson>,
    /// `G(λ, 0)`, lowest degree first.
    pub charpoly_origin: Vec<RationalJson>,
    pub root_structure: Option<RootStructure>,
    pub lemma1: Option<Lemma1Outcome>,
    /// `X(w) = x_scale · A`.
    pub x_scale: RationalJson,
    pub verdict: Verdict,
    pub failing: Vec<String>,
    pub assumptions: Vec<String>,
    pub oracle: Option<OracleReport>,
}

impl Certificate {
    pub fn det_linear_value(&self) -> Option<Rational> {
        let d = self.det_linear_coeff.as_ref()?;
        Rational::try_from(&RationalJson { num: d.num.clone(), den: d.den.clone() }).ok()
    }

    pub fn l0_value(&self) -> Option<Rational> {
        self.l0.as_ref().and_then(|q| Rational::try_from(q).ok())
    }

    pub fn delta_value(&self) -> Option<Rational> {
        self.delta.as_ref().and_then(|q| Rational::try_from(q).ok())
    }

    pub fn charpoly_origin_poly(&self) -> Option<UniPoly<Rational>> {
        let coeffs: Result<Vec<Rational>, _> = self.charpoly_origin.iter().map(Rational::try_from).collect();
        coeffs.ok().map(UniPoly::new)
    }
}

fn inconsistent(ci: &CompleteIntersection, what: &str) -> CertifyError {
    CertifyError::Inconsistent(format!("{ci}: {what}"))
}

/// Symbolic check that the origin operator has characteristic polynomial
/// `λ^{n+1} − (b₁ + … + b_e)·λ^{e−1}`.
pub fn origin_shape_holds(ci: &CompleteIntersection, coeffs: &CoeffTable) -> Result<bool, CertifyError> {
    let m = origin_operator(ci, coeffs)?;
    let expected = UniPoly::monomial(MPoly::one(), ci.n() as usize + 1)
        .sub_ref(&UniPoly::monomial(coeffs.b_sum(), ci.e() as usize - 1));
    Ok(m.char_poly() == expected)
}

/// Runs the decision flow. Errors only on internal inconsistency; every
/// mathematical outcome is a verdict.
pub fn certify(ci: &CompleteIntersection) -> Result<Certificate, CertifyError> {
    let (n, e) = (ci.n(), ci.e());
    let mut hyp = Hypotheses::of(ci);
    let mut cert = Certificate {
        input: CertificateInput {
            n,
            degrees: ci.degrees().to_vec(),
            dropped_linear: ci.dropped_linear(),
            r: ci.r(),
            d: ci.degree().to_string(),
        },
        hypotheses: hyp.clone(),
        e,
        delta: ci.delta().as_ref().map(RationalJson::from),
        l0: None,
        line_count: None,
        det_linear_coeff: None,
        charpoly_origin: Vec::new(),
        root_structure: None,
        lemma1: None,
        x_scale: (&ci.x_scale()).into(),
        verdict: Verdict::HypothesisFail,
        failing: Vec::new(),
        assumptions: vec![ASSUMPTION_ORIGIN_IDENTITY.to_string()],
        oracle: None,
    };

    if !hyp.n_ok || !hyp.fano_ok {
        cert.failing = hyp.failing();
        return Ok(cert);
    }

    let c = ci.origin_constant_rational();
    let g0 = origin_polynomial(n, e, &c);
    cert.charpoly_origin = g0.coeffs().iter().map(RationalJson::from).collect();

    // e <= 2 with n >= 3 always satisfies the degree condition
    if !hyp.degree_ok {
        cert.failing = hyp.failing();
        return Ok(cert);
    }
    if !origin_shape_holds(ci, &CoeffTable::symbolic(ci))? {
        return Err(inconsistent(ci, "origin operator does not have the expected characteristic polynomial"));
    }

    if hyp.small_e {
        let s = lemma2_root_structure(n, e, &c)?;
        if !s.is_squarefree() {
            return Err(inconsistent(ci, "origin polynomial not squarefree for e <= 2"));
        }
        cert.root_structure = Some(s);
        cert.verdict = Verdict::SemisimpleAtOrigin;
        return Ok(cert);
    }

    cert.assumptions.push(ASSUMPTION_LINE_VARIETY.to_string());
    let line = line_invariant(n, ci.degrees(), 0)?;
    cert.l0 = Some((&line.value).into());
    cert.line_count = Some(line.count.to_string());
    hyp.l0_positive = Some(line.value > Rational::from_i64(0));
    cert.hypotheses = hyp.clone();
    if hyp.l0_positive == Some(false) {
        cert.failing = hyp.failing();
        return Ok(cert);
    }

    let coeffs = CoeffTable::beauville(ci, &line.value);
    let a = build_a(ci, &coeffs)?;
    let expansion = det_linear_coeff(&a)?;
    let closed = closed_form(ci, &line.value)?;
    let direct = expansion
        .linear()
        .as_constant()
        .ok_or_else(|| inconsistent(ci, "det-linear coefficient depends on unpinned coefficients"))?;
    if direct != closed || bracket(ci, &coeffs)?.as_constant() != Some(closed.clone()) {
        return Err(inconsistent(
            ci,
            &format!(
                "jet determinant {} disagrees with closed form {}",
                format_rational(&direct),
                format_rational(&closed)
            ),
        ));
    }
    let last = last_contributing_column(ci);
    for (i, term) in expansion.column_terms.iter().enumerate() {
        let expected = match i {
            0 => first_column_term(ci, &coeffs)?,
            i if i == last => last_column_term(ci, &coeffs)?,
            _ => MPoly::zero(),
        };
        if *term != expected {
            return Err(inconsistent(ci, &format!("derivative determinant for column {i} is off")));
        }
    }
    cert.det_linear_coeff = Some(DetLinearJson {
        num: closed.numer().to_string(),
        den: closed.denom().to_string(),
        formula: closed_form_text(ci),
    });

    let g = char_poly_g(&a);
    let sign = Rational::from_i64(if n % 2 == 0 { -1 } else { 1 });
    if g.coeff(0) != expansion.det.map(|p| p.scale(&sign)) {
        return Err(inconsistent(ci, "G(0, t) differs from (-1)^(n+1) det A(t)"));
    }
    if !origin_shape_holds(ci, &coeffs)? {
        return Err(inconsistent(ci, "pinned origin operator has the wrong characteristic polynomial"));
    }
    let structure = lemma2_root_structure(n, e, &c)?;
    let evidence = OriginEvidence { polynomial: g0, structure: structure.clone() };
    cert.root_structure = Some(structure);
    let outcome = lemma1_criterion::<MPoly>(&g, Some(&evidence))?;
    cert.lemma1 = Some(outcome);
    cert.assumptions.push(ASSUMPTION_OPENNESS.to_string());

    cert.verdict = match (outcome, hyp.exception_hit) {
        (_, true) => Verdict::InconclusiveException,
        (Lemma1Outcome::GenericDistinct, false) => Verdict::CertifiedGenericSemisimple,
        (Lemma1Outcome::Inconclusive, false) => {
            return Err(inconsistent(ci, "first-order coefficient vanished outside the exceptional case"))
        }
    };
    Ok(cert)
}
