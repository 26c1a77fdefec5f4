//! JSON formats. Every rational travels as a string `"p/q"` or `"p"`;
//! JSON numbers are rejected for sequence data.

use serde::{Deserialize, Serialize};

use crate::decider::{Outcome, Verdict};
use crate::error::{Error, Result};
use crate::kernel::rational::{format_rational, parse_rational};
use crate::lrs::LrsRep;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LrsJson {
    pub recurrence: Vec<String>,
    pub initial: Vec<String>,
}

pub fn lrs_from_json(s: &str) -> Result<LrsRep> {
    let j: LrsJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let coeffs = j.recurrence.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>()?;
    let initial = j.initial.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>()?;
    LrsRep::new(coeffs, initial)
}

pub fn lrs_to_json(u: &LrsRep, pretty: bool) -> String {
    let j = LrsJson {
        recurrence: u.coeffs().iter().map(format_rational).collect(),
        initial: u.initial().iter().map(format_rational).collect(),
    };
    to_string(&j, pretty)
}

fn to_string<T: Serialize>(v: &T, pretty: bool) -> String {
    let s = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
    s.expect("plain structs always serialize")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessJson {
    /// Torsion point, angles in turns.
    pub angles: Vec<String>,
    /// Exact value of the torus function there.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidueJson {
    pub l: u64,
    pub outcome: String,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticsJson {
    pub order: usize,
    #[serde(rename = "M")]
    pub m: u64,
    pub dominant_roots: Vec<String>,
    pub lattice_basis: Vec<Vec<i64>>,
    pub lattice_completeness: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub verdict: String,
    pub residues: Vec<ResidueJson>,
    pub diagnostics: DiagnosticsJson,
}

impl VerdictJson {
    pub fn from_verdict(v: &Verdict) -> Self {
        VerdictJson {
            verdict: v.outcome.code().to_string(),
            residues: v
                .residues
                .iter()
                .map(|r| ResidueJson {
                    l: r.l,
                    outcome: r.outcome.code().to_string(),
                    reason: r.reason.to_string(),
                    witness: r.witness.as_ref().map(|w| WitnessJson {
                        angles: w.angles.iter().map(format_rational).collect(),
                        value: w.value.describe(),
                    }),
                })
                .collect(),
            diagnostics: DiagnosticsJson {
                order: v.diagnostics.order,
                m: v.diagnostics.m,
                dominant_roots: v.diagnostics.dominant_roots.clone(),
                lattice_basis: v.diagnostics.lattice_basis.clone(),
                lattice_completeness: v.diagnostics.lattice_completeness.clone(),
            },
        }
    }

    pub fn outcome(&self) -> Option<Outcome> {
        match self.verdict.as_str() {
            "UP" => Some(Outcome::UltimatelyPositive),
            "NOT_UP" => Some(Outcome::NotUltimatelyPositive),
            "INCONCLUSIVE" => Some(Outcome::Inconclusive),
            _ => None,
        }
    }
}

pub fn verdict_to_json(v: &Verdict, pretty: bool) -> String {
    to_string(&VerdictJson::from_verdict(v), pretty)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = r#"{"recurrence":["-1/5","1/5","1"],"initial":["2","2/5","18/25"]}"#;
        let u = lrs_from_json(s).unwrap();
        assert_eq!(lrs_to_json(&u, false), s);
        let again = lrs_from_json(&lrs_to_json(&u, true)).unwrap();
        assert_eq!(lrs_to_json(&again, true), lrs_to_json(&u, true));
    }

    #[test]
    fn rejects_floats_and_bad_shapes() {
        assert!(lrs_from_json(r#"{"recurrence":[1.5],"initial":["1"]}"#).is_err());
        assert!(lrs_from_json(r#"{"recurrence":["1"],"initial":["0.5"]}"#).is_err());
        assert!(lrs_from_json(r#"{"recurrence":["1","1"],"initial":["1"]}"#).is_err());
        assert!(lrs_from_json(r#"{"recurrence":["1"],"initial":["1"],"extra":1}"#).is_err());
    }
}
