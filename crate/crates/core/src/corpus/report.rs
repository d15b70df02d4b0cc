use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// Certification level of a whole entry: exact computations only, or
/// relying on the stabilization heuristic, or skipped.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Certification {
    Certified,
    Heuristic,
    NotApplicable,
}

impl std::fmt::Display for Certification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Certification::Certified => write!(f, "CERTIFIED"),
            Certification::Heuristic => write!(f, "HEURISTIC"),
            Certification::NotApplicable => write!(f, "NOT-APPLICABLE"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
}

impl CheckResult {
    pub fn compare<T: PartialEq + std::fmt::Display>(name: &str, expected: T, computed: T) -> Self {
        let verdict = if expected == computed {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        CheckResult {
            name: name.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            verdict,
        }
    }

    pub fn assert_true(name: &str, holds: bool) -> Self {
        CheckResult {
            name: name.to_string(),
            expected: "true".to_string(),
            computed: holds.to_string(),
            verdict: if holds { Verdict::Pass } else { Verdict::Fail },
        }
    }

    pub fn not_applicable(name: &str, why: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            expected: "-".to_string(),
            computed: why.to_string(),
            verdict: Verdict::NotApplicable,
        }
    }

    /// An informational line: a computed value with nothing to compare.
    pub fn report<T: std::fmt::Display>(name: &str, value: T) -> Self {
        CheckResult {
            name: name.to_string(),
            expected: "-".to_string(),
            computed: value.to_string(),
            verdict: Verdict::Pass,
        }
    }
}

/// Deterministic content of a report; everything except the wall time,
/// which is kept outside the comparison body.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportBody {
    pub id: String,
    pub description: String,
    pub checks: Vec<CheckResult>,
    pub certification: Certification,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    #[serde(flatten)]
    pub body: ReportBody,
    pub wall_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.body.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn body_json(&self) -> String {
        serde_json::to_string_pretty(&self.body).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "[{}] {} ({}, {} ms)\n",
            self.body.id, self.body.description, self.body.certification, self.wall_ms
        ));
        for c in &self.body.checks {
            out.push_str(&format!(
                "  {:<58} expected {:<22} computed {:<22} {}\n",
                c.name, c.expected, c.computed, c.verdict
            ));
        }
        out
    }
}
