//! The serialized per-matrix record.

use num_traits::Signed;
use serde::{Deserialize, Serialize};
use shadows::exactla::Rational;
use shadows::{ClassificationRecord, FilterVerdict, SkewIntMatrix};

/// One emitted matrix. Classification fields are absent when the run did
/// not classify.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: usize,
    pub index: usize,
    pub matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_shadow: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_essential: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub self_opposite: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filter_verdict: Option<VerdictRecord>,
    /// Basis vectors of the nullspace, one "p/q" string per entry.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nullspace_basis: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_parameter_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum VerdictRecord {
    Pass,
    ZeroEntry { index: usize },
    OppositePair { first: usize, second: usize },
    VanishingNaturalCombination { coefficients: Vec<u64> },
}

impl From<&FilterVerdict> for VerdictRecord {
    fn from(v: &FilterVerdict) -> Self {
        match v {
            FilterVerdict::Pass => VerdictRecord::Pass,
            FilterVerdict::ZeroEntry { index } => VerdictRecord::ZeroEntry { index: *index },
            FilterVerdict::OppositePair { first, second } => VerdictRecord::OppositePair {
                first: *first,
                second: *second,
            },
            FilterVerdict::VanishingNaturalCombination { coefficients } => {
                VerdictRecord::VanishingNaturalCombination {
                    coefficients: coefficients.clone(),
                }
            }
        }
    }
}

/// Lowest-terms `p/q`, or a bare integer when `q = 1`.
pub fn rational_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Inverse of [`rational_string`]; rejects non-reduced or signed
/// denominators so that the text form stays canonical.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let value = match s.split_once('/') {
        None => Rational::from_integer(s.parse().ok()?),
        Some((p, q)) => {
            let q: num_bigint::BigInt = q.parse().ok()?;
            if !q.is_positive() {
                return None;
            }
            Rational::new(p.parse().ok()?, q)
        }
    };
    (rational_string(&value) == s).then_some(value)
}

impl OutputRecord {
    pub fn bare(index: usize, a: &SkewIntMatrix) -> Self {
        Self {
            n: a.n(),
            index,
            matrix: a.to_rows(),
            is_shadow: None,
            is_essential: None,
            self_opposite: None,
            filter_verdict: None,
            nullspace_basis: None,
            kernel_parameter_count: None,
            witness: None,
        }
    }

    pub fn classified(index: usize, rec: &ClassificationRecord) -> Self {
        let basis = rec
            .x
            .basis()
            .iter()
            .map(|v| v.iter().map(rational_string).collect())
            .collect();
        Self {
            is_shadow: Some(rec.is_shadow),
            is_essential: Some(rec.is_essential),
            self_opposite: Some(rec.self_opposite),
            filter_verdict: Some((&rec.filter).into()),
            nullspace_basis: Some(basis),
            kernel_parameter_count: Some(rec.c_generic.num_params),
            witness: rec.witness.clone(),
            ..Self::bare(index, &rec.matrix)
        }
    }

    pub fn to_matrix(&self) -> shadows::Result<SkewIntMatrix> {
        SkewIntMatrix::from_rows(&self.matrix)
    }

    pub fn is_classified(&self) -> bool {
        self.is_shadow.is_some()
    }
}
