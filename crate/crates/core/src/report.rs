//! Pass/fail records for verification runs.
//!
//! # Structured format
//!
//! [`Report::to_json_lines`] writes one JSON object per line. The first line
//! is the header:
//!
//! ```text
//! {"record":"header","suite":"...","convention":"...","total":N,"passed":P,"failed":F}
//! ```
//!
//! followed by one line per check, ordered by name then parameters:
//!
//! ```text
//! {"record":"check","name":"...","params":{"g":"2"},"passed":true,"witness":null,"evidence":null,"citation":"..."}
//! ```
//!
//! `witness` is set exactly when `passed` is false and names the first
//! differing generator with both images. `evidence` optionally carries
//! supporting data for passing checks (for example, the generator on which
//! two maps were shown to differ).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::endo::Endo;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub passed: bool,
    pub witness: Option<String>,
    pub evidence: Option<String>,
    pub citation: String,
}

impl CheckResult {
    pub fn new(
        name: &str,
        params: &[(&str, String)],
        citation: &str,
        passed: bool,
        witness: Option<String>,
    ) -> Self {
        let params = params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        let witness = if passed {
            None
        } else {
            Some(witness.unwrap_or_else(|| "check failed".into()))
        };
        CheckResult {
            name: name.into(),
            params,
            passed,
            witness,
            evidence: None,
            citation: citation.into(),
        }
    }

    /// Passes when the two tables agree letterwise.
    pub fn equal(
        name: &str,
        params: &[(&str, String)],
        citation: &str,
        left: &Endo,
        right: &Endo,
    ) -> Self {
        let witness = if left.alphabet() != right.alphabet() {
            Some(format!(
                "alphabets differ: {} vs {}",
                left.alphabet(),
                right.alphabet()
            ))
        } else {
            left.first_difference(right).map(|d| d.to_string())
        };
        CheckResult::new(name, params, citation, witness.is_none(), witness)
    }

    /// Passes when the two tables disagree; the first difference is kept as
    /// evidence.
    pub fn different(
        name: &str,
        params: &[(&str, String)],
        citation: &str,
        left: &Endo,
        right: &Endo,
    ) -> Self {
        match left.first_difference(right) {
            Some(d) => {
                CheckResult::new(name, params, citation, true, None).with_evidence(d.to_string())
            }
            None if left.alphabet() != right.alphabet() => {
                CheckResult::new(name, params, citation, true, None)
            }
            None => CheckResult::new(name, params, citation, false, Some("maps are equal".into())),
        }
    }

    /// A failed check caused by an error while building its inputs.
    pub fn errored(
        name: &str,
        params: &[(&str, String)],
        citation: &str,
        error: impl fmt::Display,
    ) -> Self {
        CheckResult::new(
            name,
            params,
            citation,
            false,
            Some(format!("error: {error}")),
        )
    }

    pub fn with_evidence(mut self, evidence: impl Into<String>) -> Self {
        self.evidence = Some(evidence.into());
        self
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }

    fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    fn sort_key(&self) -> (String, String) {
        (self.name.clone(), self.params_text())
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}({})", self.name, self.params_text())?;
        if let Some(w) = &self.witness {
            write!(f, " -- {w}")?;
        }
        if let Some(e) = &self.evidence {
            write!(f, " [{e}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub convention: String,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    /// Citation for every check name that ran.
    pub citations: BTreeMap<String, String>,
}

#[derive(Serialize)]
struct HeaderRecord<'a> {
    record: &'static str,
    suite: &'a str,
    convention: &'a str,
    total: usize,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    record: &'static str,
    #[serde(flatten)]
    check: &'a CheckResult,
}

impl Report {
    /// Sorts the results by name and parameters and fills in the summary.
    pub fn new(
        suite: impl Into<String>,
        convention: impl Into<String>,
        mut results: Vec<CheckResult>,
    ) -> Self {
        results.sort_by_key(CheckResult::sort_key);
        let passed = results.iter().filter(|r| r.passed).count();
        let summary = Summary {
            total: results.len(),
            passed,
            failed: results.len() - passed,
        };
        let citations = results
            .iter()
            .map(|r| (r.name.clone(), r.citation.clone()))
            .collect();
        Report {
            suite: suite.into(),
            convention: convention.into(),
            results,
            summary,
            citations,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    pub fn find<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a CheckResult> + 'a {
        self.results.iter().filter(move |r| r.name == name)
    }

    pub fn to_json_lines(&self) -> String {
        let header = HeaderRecord {
            record: "header",
            suite: &self.suite,
            convention: &self.convention,
            total: self.summary.total,
            passed: self.summary.passed,
            failed: self.summary.failed,
        };
        let mut out = serde_json::to_string(&header).expect("serializable header");
        out.push('\n');
        for check in &self.results {
            out.push_str(
                &serde_json::to_string(&CheckRecord {
                    record: "check",
                    check,
                })
                .expect("serializable check"),
            );
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# suite: {}\n# convention: {}\n",
            self.suite, self.convention
        );
        for check in &self.results {
            out.push_str(&check.to_string());
            out.push('\n');
        }
        out.push_str(&format!(
            "# {} checks, {} passed, {} failed\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        out
    }
}
