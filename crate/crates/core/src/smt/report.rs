//! Verdicts, hypothesis trails and serialization helpers shared by the verifiers.

use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    /// The coefficient `q - (m + 1)K` is not positive, so nothing is claimed.
    VacuousPass,
    Violation,
    HypothesisFailure,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::VacuousPass)
    }

    /// Worst of two verdicts: hypothesis failures dominate, then violations.
    pub fn combine(self, other: Verdict) -> Verdict {
        fn rank(v: Verdict) -> u8 {
            match v {
                Verdict::Pass => 0,
                Verdict::VacuousPass => 1,
                Verdict::Violation => 2,
                Verdict::HypothesisFailure => 3,
            }
        }
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::VacuousPass => "vacuous-pass",
            Verdict::Violation => "violation",
            Verdict::HypothesisFailure => "hypothesis-failure",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl HypothesisCheck {
    pub fn new(name: &str, holds: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            holds,
            detail: detail.into(),
        }
    }
}

pub fn all_hold(trail: &[HypothesisCheck]) -> bool {
    trail.iter().all(|h| h.holds)
}

/// Serializes a 0-based index as the 1-based number users see.
pub fn one_based<S: Serializer>(i: &usize, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(*i as u64 + 1)
}

pub fn one_based_vec<S: Serializer>(v: &[usize], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|i| i + 1))
}

pub fn one_based_nested<S: Serializer>(v: &[Vec<usize>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        v.iter()
            .map(|r| r.iter().map(|i| i + 1).collect::<Vec<_>>()),
    )
}

/// Left-aligned plain-text table.
pub fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.clone()));
        out.push('\n');
    }
    out
}
