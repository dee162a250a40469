use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    Mantel,
    Erdos,
    Turan,
    LovaszSimonovitsBound,
    Lemma1,
    Lemma3,
    Main,
    Conjecture1,
    Conjecture2,
}

impl ClaimId {
    pub const ALL: [ClaimId; 9] = [
        ClaimId::Mantel,
        ClaimId::Erdos,
        ClaimId::Turan,
        ClaimId::LovaszSimonovitsBound,
        ClaimId::Lemma1,
        ClaimId::Lemma3,
        ClaimId::Main,
        ClaimId::Conjecture1,
        ClaimId::Conjecture2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Mantel => "mantel",
            ClaimId::Erdos => "erdos",
            ClaimId::Turan => "turan",
            ClaimId::LovaszSimonovitsBound => "lovasz_simonovits_bound",
            ClaimId::Lemma1 => "lemma1",
            ClaimId::Lemma3 => "lemma3",
            ClaimId::Main => "main",
            ClaimId::Conjecture1 => "conjecture1",
            ClaimId::Conjecture2 => "conjecture2",
        }
    }

    /// Conjectures are reported on, never asserted.
    pub fn is_conjecture(self) -> bool {
        matches!(self, ClaimId::Conjecture1 | ClaimId::Conjecture2)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .or(match s.as_str() {
                "ls" | "lovasz_simonovits" => Some(ClaimId::LovaszSimonovitsBound),
                _ => None,
            })
            .ok_or_else(|| Error::ClaimRange(format!("unknown claim {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_max: Option<usize>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Params {
            n: Some(n),
            ..Params::default()
        }
    }

    pub(crate) fn require(v: Option<usize>, name: &str) -> Result<usize> {
        v.ok_or_else(|| Error::ClaimRange(format!("missing parameter {name}")))
    }
}

/// Outcome of one checker run.
///
/// `witnesses` are graph6 strings (one per isomorphism class, graph6-least
/// member) attaining `extremal_value`; `counterexamples` violate the claim.
/// For the grid claim both hold `A=..,B=..,a=..,b=..` tuples instead.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: ClaimId,
    pub params: Params,
    pub space_size: u64,
    pub extremal_value: Option<u64>,
    /// The value the claim promises (bound, conjectured minimum, ...).
    pub bound: Option<u64>,
    pub holds: bool,
    pub report_only: bool,
    pub witnesses: Vec<String>,
    pub counterexamples: Vec<String>,
    /// Labelled counterexample graphs found, before isomorphism reduction.
    pub counterexample_count: u64,
    pub truncated: bool,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub(crate) fn new(claim_id: ClaimId, params: Params) -> Self {
        VerificationReport {
            claim_id,
            params,
            space_size: 0,
            extremal_value: None,
            bound: None,
            holds: true,
            report_only: claim_id.is_conjecture(),
            witnesses: Vec::new(),
            counterexamples: Vec::new(),
            counterexample_count: 0,
            truncated: false,
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Parses a report and re-checks every counterexample independently.
    pub fn from_json(s: &str) -> Result<Self> {
        let report: VerificationReport =
            serde_json::from_str(s).map_err(|e| Error::Report(e.to_string()))?;
        report.revalidate()?;
        Ok(report)
    }

    /// Every counterexample must actually violate the claim, judged with the
    /// brute-force oracles rather than the code that found it.
    pub fn revalidate(&self) -> Result<()> {
        for c in &self.counterexamples {
            if !super::violates_claim(self.claim_id, &self.params, c)? {
                return Err(Error::Report(format!(
                    "{c} does not violate {}",
                    self.claim_id
                )));
            }
        }
        Ok(())
    }

    /// One-paragraph human summary.
    pub fn summary(&self) -> String {
        let mut out = format!("claim {}", self.claim_id);
        let p = &self.params;
        for (name, v) in [
            ("n", p.n),
            ("t", p.t),
            ("s", p.s),
            ("k", p.k),
            ("a_max", p.a_max),
            ("b_max", p.b_max),
        ] {
            if let Some(v) = v {
                out += &format!(" {name}={v}");
            }
        }
        let show = |v: Option<u64>| v.map_or("none".to_string(), |v| v.to_string());
        out += &format!(
            "\nspace_size {}\nextremal_value {}\nbound {}\nstatus {}\n",
            self.space_size,
            show(self.extremal_value),
            show(self.bound),
            match (self.holds, self.report_only) {
                (true, false) => "holds",
                (false, false) => "COUNTEREXAMPLE",
                (true, true) => "consistent with conjecture",
                (false, true) => "below conjectured value",
            }
        );
        for w in &self.witnesses {
            out += &format!("witness {w}\n");
        }
        for c in &self.counterexamples {
            out += &format!("counterexample {c}\n");
        }
        for n in &self.notes {
            out += &format!("note {n}\n");
        }
        out += &format!("elapsed_ms {}", self.elapsed_ms);
        out
    }
}
