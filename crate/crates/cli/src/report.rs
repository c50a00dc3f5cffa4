use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        }
    }
}

/// Offending superpartitions and, where there is one, the exact residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<String>,
}

impl Witness {
    pub fn labels<S: ToString>(labels: &[S]) -> Self {
        Witness { labels: labels.iter().map(|l| l.to_string()).collect(), residual: None }
    }

    pub fn with_residual<S: ToString>(labels: &[S], residual: impl ToString) -> Self {
        Witness { residual: Some(residual.to_string()), ..Witness::labels(labels) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<(u32, u32)>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<Witness>,
}

impl Check {
    pub fn new(name: impl Into<String>, degree: Option<(u32, u32)>) -> Self {
        Check { name: name.into(), degree, status: Status::Pass, detail: None, witnesses: Vec::new() }
    }

    /// Fails when any witness is given.
    pub fn from_witnesses(name: impl Into<String>, degree: Option<(u32, u32)>, witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.is_empty() { Status::Pass } else { Status::Fail };
        Check { status, witnesses, ..Check::new(name, degree) }
    }

    pub fn pass_if(name: impl Into<String>, degree: Option<(u32, u32)>, ok: bool) -> Self {
        Check { status: if ok { Status::Pass } else { Status::Fail }, ..Check::new(name, degree) }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn witness(mut self, w: Witness) -> Self {
        self.status = Status::Fail;
        self.witnesses.push(w);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub status: Status,
    pub degrees: Vec<(u32, u32)>,
    pub checks: Vec<Check>,
    /// Seconds per degree, keyed `n_m`.
    pub timings: BTreeMap<String, f64>,
}

impl SuiteResult {
    pub fn new(suite: &str, degrees: Vec<(u32, u32)>, checks: Vec<Check>, timings: BTreeMap<String, f64>) -> Self {
        let status = if checks.iter().any(|c| c.status == Status::Fail) { Status::Fail } else { Status::Pass };
        SuiteResult { suite: suite.to_string(), status, degrees, checks, timings }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "suite {}: {}", self.suite, if self.passed() { "pass" } else { "FAIL" }).unwrap();
        if !self.degrees.is_empty() {
            let ds: Vec<String> = self.degrees.iter().map(|(n, m)| format!("({n}|{m})")).collect();
            writeln!(out, "degrees: {}", ds.join(" ")).unwrap();
        }
        for c in &self.checks {
            let deg = c.degree.map(|(n, m)| format!(" ({n}|{m})")).unwrap_or_default();
            let detail = c.detail.as_ref().map(|d| format!(": {d}")).unwrap_or_default();
            writeln!(out, "[{}] {}{deg}{detail}", c.status.tag(), c.name).unwrap();
            for w in &c.witnesses {
                let labels = w.labels.iter().map(|l| format!("({l})")).collect::<Vec<_>>().join(" ");
                match &w.residual {
                    Some(r) => writeln!(out, "    witness {labels}: {r}").unwrap(),
                    None => writeln!(out, "    witness {labels}").unwrap(),
                }
            }
        }
        for (d, secs) in &self.timings {
            writeln!(out, "time {d}: {secs:.3}s").unwrap();
        }
        out
    }
}
