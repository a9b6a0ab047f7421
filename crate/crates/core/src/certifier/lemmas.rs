use serde::{Deserialize, Serialize};

use crate::kernel::{Jet, Rational, Ring, UniPoly};

use super::CertifyError;

/// `λ^{n+1} − c·λ^{e−1}`.
pub fn origin_polynomial(n: u32, e: u32, c: &Rational) -> UniPoly<Rational> {
    let lead = UniPoly::monomial(Rational::from_i64(1), n as usize + 1);
    let low = UniPoly::monomial(c.clone(), e.saturating_sub(1) as usize);
    lead.sub_ref(&low)
}

/// Multiplicity data of a polynomial at the origin of the deformation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootStructure {
    pub degree: u32,
    /// Multiplicity of the root `0` (zero when `0` is not a root).
    pub zero_multiplicity: u32,
    /// Number of simple nonzero roots.
    pub simple_nonzero: u32,
    /// Degree of `gcd(G, G′)`.
    pub gcd_degree: u32,
    /// True when no root other than `0` is repeated.
    pub only_zero_repeated: bool,
}

impl RootStructure {
    /// Exact analysis via the squarefree decomposition.
    pub fn analyze(p: &UniPoly<Rational>) -> Result<Self, CertifyError> {
        let degree = p.degree().ok_or(CertifyError::Domain("zero polynomial"))? as u32;
        let g = p.gcd(&p.derivative());
        let gcd_degree = g.degree().unwrap_or(0) as u32;
        let zero_multiplicity = p.coeffs().iter().take_while(|c| c.is_zero()).count() as u32;
        let mut simple_nonzero = 0;
        let mut only_zero_repeated = true;
        for (factor, mult) in p.squarefree_decomposition()? {
            let deg = factor.degree().unwrap_or(0) as u32;
            let zero_here = factor.coeff(0).is_zero();
            let nonzero_roots = deg - zero_here as u32;
            if mult == 1 {
                simple_nonzero += nonzero_roots;
            } else if nonzero_roots > 0 {
                only_zero_repeated = false;
            }
        }
        Ok(RootStructure { degree, zero_multiplicity, simple_nonzero, gcd_degree, only_zero_repeated })
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd_degree == 0
    }
}

/// Root structure of `λ^{n+1} − c·λ^{e−1}`: `0` with multiplicity `e − 1`
/// and `n + 2 − e` simple nonzero roots. The exact gcd must confirm this.
pub fn lemma2_root_structure(n: u32, e: u32, c: &Rational) -> Result<RootStructure, CertifyError> {
    if c.is_zero() {
        return Err(CertifyError::Domain("constant c must be nonzero"));
    }
    if n < 3 || e == 0 || e > n {
        return Err(CertifyError::Domain("requires n >= 3 and 1 <= e < n + 1"));
    }
    let s = RootStructure::analyze(&origin_polynomial(n, e, c))?;
    let expected_gcd = e.saturating_sub(2);
    let consistent = s.zero_multiplicity == e - 1
        && s.simple_nonzero == n + 2 - e
        && s.gcd_degree == expected_gcd
        && s.only_zero_repeated;
    if !consistent {
        return Err(CertifyError::Inconsistent(format!(
            "origin polynomial n={n} e={e} has unexpected root structure {s:?}"
        )));
    }
    Ok(s)
}

/// Evidence that the only repeated root of `g(y, 0)` is `y = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct OriginEvidence {
    pub polynomial: UniPoly<Rational>,
    pub structure: RootStructure,
}

impl OriginEvidence {
    pub fn new(polynomial: UniPoly<Rational>) -> Result<Self, CertifyError> {
        let structure = RootStructure::analyze(&polynomial)?;
        Ok(OriginEvidence { polynomial, structure })
    }

    /// Whether `g(y, 0)` is the polynomial this evidence describes.
    pub fn describes(&self, g: &UniPoly<Jet<Rational>>) -> bool {
        g.map(|c| c.constant_part().clone()) == self.polynomial
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Lemma1Outcome {
    /// Roots are distinct for generic values of the deformation variables.
    GenericDistinct,
    /// The criterion does not apply; nothing is claimed either way.
    Inconclusive,
}

/// Sufficient criterion for generically distinct roots of a monic
/// `g(y, z) = yᵐ + g₁(z)yᵐ⁻¹ + … + g_m(z)` with jet coefficients.
///
/// If the only repeated root of `g(y, 0)` is `0` and `g_m` is not in `(z)²`,
/// the roots are distinct for generic `z`. The converse fails, so a vanishing
/// first-order part only yields `Inconclusive`.
///
/// The caller vouches that `evidence` describes `g(y, 0)`; over rational jets
/// use [`OriginEvidence::describes`] to check it.
pub fn lemma1_criterion<R: Ring>(
    g: &UniPoly<Jet<R>>,
    evidence: Option<&OriginEvidence>,
) -> Result<Lemma1Outcome, CertifyError> {
    let lead = g.leading().ok_or(CertifyError::NotMonic)?;
    if !lead.is_one() {
        return Err(CertifyError::NotMonic);
    }
    let evidence = evidence.ok_or(CertifyError::MissingEvidence)?;
    if evidence.structure.degree as usize != g.degree().unwrap_or(0) || !evidence.structure.only_zero_repeated {
        return Err(CertifyError::MissingEvidence);
    }
    if g.coeff(0).in_square_of_maximal_ideal() {
        Ok(Lemma1Outcome::Inconclusive)
    } else {
        Ok(Lemma1Outcome::GenericDistinct)
    }
}
