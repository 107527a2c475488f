//! Pass/fail reports for identity checks over parameter ranges.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One failing parameter tuple with both sides of the failed comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub params: BTreeMap<String, i64>,
    pub lhs: Value,
    pub rhs: Value,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Witness {
    pub fn new<L: Serialize + ?Sized, R: Serialize + ?Sized>(params: &[(&str, i64)], lhs: &L, rhs: &R) -> Self {
        Witness {
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            lhs: serde_json::to_value(lhs).unwrap_or(Value::Null),
            rhs: serde_json::to_value(rhs).unwrap_or(Value::Null),
            note: String::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub ranges: String,
    pub checked: usize,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TheoremReport {
    /// Builds a report from per-case outcomes, in the order given. The
    /// status is `Fail` exactly when some witness is present.
    pub fn from_cases(theorem_id: &str, ranges: impl Into<String>, cases: Vec<Option<Witness>>) -> Self {
        let checked = cases.len();
        let witnesses: Vec<Witness> = cases.into_iter().flatten().collect();
        TheoremReport {
            theorem_id: theorem_id.to_string(),
            ranges: ranges.into(),
            checked,
            status: if witnesses.is_empty() { Status::Pass } else { Status::Fail },
            witnesses,
            notes: Vec::new(),
        }
    }

    pub fn single(theorem_id: &str, ranges: impl Into<String>, case: Option<Witness>) -> Self {
        Self::from_cases(theorem_id, ranges, vec![case])
    }

    /// Concatenates reports for the same theorem, keeping their order.
    pub fn merge(theorem_id: &str, ranges: impl Into<String>, parts: Vec<TheoremReport>) -> Self {
        let mut out = Self::from_cases(theorem_id, ranges, Vec::new());
        for p in parts {
            out.checked += p.checked;
            out.witnesses.extend(p.witnesses);
            out.notes.extend(p.notes);
        }
        if !out.witnesses.is_empty() {
            out.status = Status::Fail;
        }
        out
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Plain-text table, one row per report, then any witnesses and notes.
pub fn render_table(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    let id_w = reports.iter().map(|r| r.theorem_id.len()).max().unwrap_or(2).max(8);
    let _ = writeln!(out, "{:<id_w$}  {:<6}  {:>8}  ranges", "theorem", "status", "checked");
    for r in reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        let _ = writeln!(out, "{:<id_w$}  {:<6}  {:>8}  {}", r.theorem_id, status, r.checked, r.ranges);
    }
    for r in reports {
        for w in &r.witnesses {
            let params: Vec<String> = w.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(out, "  {} witness [{}]: lhs={} rhs={} {}", r.theorem_id, params.join(","), w.lhs, w.rhs, w.note);
        }
        for n in &r.notes {
            let _ = writeln!(out, "  {} note: {n}", r.theorem_id);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_witnesses() {
        let ok = TheoremReport::from_cases("x", "n<=2", vec![None, None]);
        assert!(ok.passed());
        assert_eq!(ok.checked, 2);
        let w = Witness::new(&[("n", 2)], &[1, 2], &[1, 3]);
        let bad = TheoremReport::from_cases("x", "n<=2", vec![None, Some(w.clone())]);
        assert_eq!(bad.status, Status::Fail);
        assert_eq!(bad.witnesses, vec![w]);
        let merged = TheoremReport::merge("x", "all", vec![ok, bad]);
        assert_eq!((merged.checked, merged.status), (4, Status::Fail));
    }

    #[test]
    fn json_and_table() {
        let r = TheoremReport::single("thm", "k=1", None);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "pass");
        assert!(render_table(&[r]).contains("thm"));
    }
}
