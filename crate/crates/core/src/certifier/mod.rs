//! Decision flow for generic semi-simplicity, the two root lemmas it rests
//! on, and a seeded numeric oracle.

mod certify;
mod lemmas;
mod oracle;

use thiserror::Error;

use crate::kernel::{NumericError, PolyError};
use crate::operator::OperatorError;
use crate::schubert::SchubertError;

pub use certify::{
    certify, origin_shape_holds, Certificate, CertificateInput, DetLinearJson, Hypotheses, Verdict,
    ASSUMPTION_LINE_VARIETY, ASSUMPTION_OPENNESS, ASSUMPTION_ORIGIN_IDENTITY,
};
pub use lemmas::{
    lemma1_criterion, lemma2_root_structure, origin_polynomial, Lemma1Outcome, OriginEvidence, RootStructure,
};
pub use oracle::{numeric_oracle, OracleReport, SampleReport, DEFAULT_SEED};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CertifyError {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("polynomial is not monic in the main variable")]
    NotMonic,
    #[error("no evidence that zero is the only repeated root at the origin")]
    MissingEvidence,
    #[error("oracle needs a semi-simplicity verdict, got {0}")]
    OracleRefused(Verdict),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Schubert(#[from] SchubertError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

impl CertifyError {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, CertifyError::Inconsistent(_) | CertifyError::Numeric(_))
    }
}
