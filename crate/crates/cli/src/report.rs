use std::fs;
use std::io;
use std::path::Path;

use serde::Serialize;
use serde_json::{Map, Value};

use qcongruence_core::algebra::{BigInt, BigRational, Polynomial};
use qcongruence_core::padic::PadicCheck;
use qcongruence_core::verify::{CongruenceVerdict, LimitVerdict, Status};

use crate::config::RunConfig;

pub const TOOL: &str = "qcongruence";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryStatus {
    Pass,
    Fail,
    Inapplicable,
    Skipped,
}

impl From<Status> for EntryStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::Pass => EntryStatus::Pass,
            Status::Fail => EntryStatus::Fail,
            Status::Inapplicable => EntryStatus::Inapplicable,
        }
    }
}

/// `"num/den"`, always with an explicit denominator.
pub fn rational_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Coefficients lowest degree first.
pub fn coefficient_list(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(rational_string).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub degree: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Congruence {
        modulus_degree: usize,
        remainder_degree: Option<usize>,
        /// Up to three highest nonzero terms of the remainder.
        remainder_leading_terms: Vec<Term>,
        coprimality_witness: Vec<String>,
    },
    Residues {
        precision: u32,
        lhs: String,
        rhs: String,
    },
    Limit {
        double_root: bool,
        limit: Option<String>,
        expected: String,
    },
}

impl Witness {
    pub fn congruence(v: &CongruenceVerdict) -> Self {
        let r = &v.remainder;
        let remainder_leading_terms = (0..r.len())
            .rev()
            .filter(|&d| *r.coeff(d).numer() != BigInt::from(0))
            .take(3)
            .map(|d| Term {
                degree: d,
                coeff: rational_string(&r.coeff(d)),
            })
            .collect();
        Witness::Congruence {
            modulus_degree: v.modulus_degree,
            remainder_degree: r.degree().finite(),
            remainder_leading_terms,
            coprimality_witness: coefficient_list(&v.coprimality_witness),
        }
    }

    pub fn residues(c: &PadicCheck) -> Self {
        Witness::Residues {
            precision: c.precision(),
            lhs: c.lhs.value().to_string(),
            rhs: c.rhs.value().to_string(),
        }
    }

    pub fn limit(v: &LimitVerdict) -> Self {
        Witness::Limit {
            double_root: v.double_root,
            limit: v.limit.as_ref().map(rational_string),
            expected: rational_string(&v.expected),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub claim: &'static str,
    pub instance: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<Map<String, Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    pub status: EntryStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RejectionEntry {
    pub claim: &'static str,
    pub instance: Map<String, Value>,
    pub trial: usize,
    pub params: Map<String, Value>,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub entries: usize,
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub skipped: usize,
    pub rejected_samples: usize,
}

impl Summary {
    pub fn tally(entries: &[Entry], rejections: &[RejectionEntry]) -> Self {
        let count = |s: EntryStatus| entries.iter().filter(|e| e.status == s).count();
        Summary {
            entries: entries.len(),
            pass: count(EntryStatus::Pass),
            fail: count(EntryStatus::Fail),
            inapplicable: count(EntryStatus::Inapplicable),
            skipped: count(EntryStatus::Skipped),
            rejected_samples: rejections.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: RunConfig,
    pub entries: Vec<Entry>,
    pub rejections: Vec<RejectionEntry>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn emit_report(report: &VerificationReport, path: &Path) -> io::Result<()> {
    fs::write(path, report.to_json())
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcongruence_core::algebra::rat;

    #[test]
    fn rationals_always_carry_a_denominator() {
        assert_eq!(rational_string(&rat(3, 1)), "3/1");
        assert_eq!(rational_string(&rat(-6, 4)), "-3/2");
        let p = Polynomial::from_ints(&[1, 0, -2]);
        assert_eq!(coefficient_list(&p), vec!["1/1", "0/1", "-2/1"]);
    }

    #[test]
    fn congruence_witness_lists_leading_terms() {
        let v = CongruenceVerdict {
            status: Status::Fail,
            modulus_degree: 6,
            remainder: Polynomial::from_ints(&[5, 0, 3, 0, -1, 2]),
            coprimality_witness: Polynomial::one(),
        };
        let json = serde_json::to_string(&Witness::congruence(&v)).unwrap();
        assert_eq!(
            json,
            r#"{"modulus_degree":6,"remainder_degree":5,"remainder_leading_terms":[{"degree":5,"coeff":"2/1"},{"degree":4,"coeff":"-1/1"},{"degree":2,"coeff":"3/1"}],"coprimality_witness":["1/1"]}"#
        );
    }
}
