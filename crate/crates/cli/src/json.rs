//! Versioned JSON documents for certificates, thresholds, and bounds.
//!
//! Every integer is serialized as a decimal string and every rational as a
//! `[numerator, denominator]` pair of decimal strings, so magnitudes are
//! unbounded and exactness survives the round trip. Zero quotient
//! coefficients are retained positionally here even though the human
//! renderings omit them.

use serde::{Deserialize, Serialize};

use polycert::{BigInt, Certificate, Poly, PositivityVerdict, Rat, ThresholdBracket};

pub const CERT_SCHEMA: &str = "polycert-cert-v1";
pub const THRESHOLD_SCHEMA: &str = "polycert-threshold-v1";
pub const BOUND_SCHEMA: &str = "polycert-bound-v1";
pub const VERIFY_SCHEMA: &str = "polycert-verify-v1";

/// `[numerator, denominator]`, both decimal strings, denominator positive.
pub type RatPair = [String; 2];

pub fn rat_to_pair(r: &Rat) -> RatPair {
    [r.numer().to_string(), r.denom().to_string()]
}

pub fn pair_to_rat(pair: &RatPair) -> Result<Rat, String> {
    let numer: BigInt = pair[0]
        .parse()
        .map_err(|_| format!("invalid integer \"{}\"", pair[0]))?;
    let denom: BigInt = pair[1]
        .parse()
        .map_err(|_| format!("invalid integer \"{}\"", pair[1]))?;
    if denom == BigInt::from(0) {
        return Err("zero denominator in rational".to_string());
    }
    Ok(Rat::new(numer, denom))
}

pub(crate) fn poly_to_pairs(f: &Poly) -> Vec<RatPair> {
    f.coeffs_descending().iter().map(rat_to_pair).collect()
}

fn pairs_to_poly(pairs: &[RatPair], variable: &str) -> Result<Poly, String> {
    let coeffs = pairs.iter().map(pair_to_rat).collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::from_descending(coeffs).with_variable(variable))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VerdictDoc {
    AllNonnegative,
    HasNegative { index: String },
}

/// The serialized form of a [`Certificate`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub schema: String,
    pub variable: String,
    /// Input coefficients, descending powers.
    pub input: Vec<RatPair>,
    pub shift: RatPair,
    /// Quotient coefficients, descending powers, zeros retained.
    pub quotient: Vec<RatPair>,
    pub remainder: RatPair,
    pub verdict: VerdictDoc,
}

impl CertificateDoc {
    pub fn from_certificate(cert: &Certificate) -> Self {
        let verdict = match cert.verdict() {
            PositivityVerdict::AllNonnegative => VerdictDoc::AllNonnegative,
            PositivityVerdict::HasNegative(index) => VerdictDoc::HasNegative {
                index: index.to_string(),
            },
        };
        CertificateDoc {
            schema: CERT_SCHEMA.to_string(),
            variable: cert.input_poly().variable_name().to_string(),
            input: poly_to_pairs(cert.input_poly()),
            shift: rat_to_pair(cert.shift()),
            quotient: cert.quotient_coefficients().iter().map(rat_to_pair).collect(),
            remainder: rat_to_pair(cert.remainder()),
            verdict,
        }
    }

    pub fn into_certificate(self) -> Result<Certificate, String> {
        if self.schema != CERT_SCHEMA {
            return Err(format!(
                "unsupported schema \"{}\" (expected \"{CERT_SCHEMA}\")",
                self.schema
            ));
        }
        let input = pairs_to_poly(&self.input, &self.variable)?;
        let shift = pair_to_rat(&self.shift)?;
        let quotient = self
            .quotient
            .iter()
            .map(pair_to_rat)
            .collect::<Result<Vec<_>, _>>()?;
        let remainder = pair_to_rat(&self.remainder)?;
        let verdict = match self.verdict {
            VerdictDoc::AllNonnegative => PositivityVerdict::AllNonnegative,
            VerdictDoc::HasNegative { index } => PositivityVerdict::HasNegative(
                index
                    .parse()
                    .map_err(|_| format!("invalid verdict index \"{index}\""))?,
            ),
        };
        Ok(Certificate::from_parts(input, shift, quotient, remainder, verdict))
    }
}

/// The serialized form of a [`ThresholdBracket`] plus the induced minimal
/// integer shift.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ThresholdDoc {
    pub schema: String,
    pub variable: String,
    pub input: Vec<RatPair>,
    pub epsilon: RatPair,
    pub lo: RatPair,
    pub hi: RatPair,
    pub exact: Option<RatPair>,
    pub witness_index_p: Option<String>,
    pub minimal_integer_shift: String,
}

impl ThresholdDoc {
    pub fn new(f: &Poly, bracket: &ThresholdBracket, minimal_shift: &BigInt) -> Self {
        ThresholdDoc {
            schema: THRESHOLD_SCHEMA.to_string(),
            variable: f.variable_name().to_string(),
            input: poly_to_pairs(f),
            epsilon: rat_to_pair(bracket.epsilon()),
            lo: rat_to_pair(bracket.lo()),
            hi: rat_to_pair(bracket.hi()),
            exact: bracket.exact().map(rat_to_pair),
            witness_index_p: bracket.witness_index().map(|p| p.to_string()),
            minimal_integer_shift: minimal_shift.to_string(),
        }
    }
}

/// The serialized form of a Lagrange bound report; `bound` is absent when
/// the input has no negative coefficient.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundDoc {
    pub schema: String,
    pub variable: String,
    pub input: Vec<RatPair>,
    pub epsilon: RatPair,
    pub bound: Option<BoundBodyDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundBodyDoc {
    pub first_negative_index_k: String,
    #[serde(rename = "magnitude_B")]
    pub magnitude_b: RatPair,
    pub bound_overestimate: RatPair,
    pub slack: RatPair,
}

/// The serialized outcome of a verification run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub schema: String,
    /// "valid", "identity-mismatch", or "negative-coefficient-claimed".
    pub outcome: String,
}
