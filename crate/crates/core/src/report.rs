//! Scenario reports and their text and JSON renderings.

use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Error => "ERROR",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub evidence: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub checks: Vec<Check>,
    pub overall: Verdict,
    /// Set when some check stopped at a step limit or enumeration budget.
    #[serde(skip)]
    pub limit_hit: bool,
}

impl ScenarioReport {
    pub fn new(scenario: impl Into<String>) -> Self {
        ScenarioReport {
            scenario: scenario.into(),
            checks: Vec::new(),
            overall: Verdict::Pass,
            limit_hit: false,
        }
    }

    /// Records a check from a computation returning `(passed, evidence)`.
    pub fn check(&mut self, name: impl Into<String>, outcome: Result<(bool, String), Error>) {
        let (verdict, evidence) = match outcome {
            Ok((true, e)) => (Verdict::Pass, e),
            Ok((false, e)) => (Verdict::Fail, e),
            Err(e) => {
                self.limit_hit |= e.is_limit();
                (Verdict::Error, e.to_string())
            }
        };
        if verdict != Verdict::Pass {
            self.overall = Verdict::Fail;
        }
        self.checks.push(Check {
            name: name.into(),
            verdict,
            evidence,
        });
    }

    pub fn passed(&self) -> bool {
        self.overall == Verdict::Pass
    }

    /// Looks up a check by name.
    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn render_report(report: &ScenarioReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = format!("scenario: {}\n", report.scenario);
            for c in &report.checks {
                out.push_str(&format!("[{}] {}: {}\n", c.verdict.label(), c.name, c.evidence));
            }
            out.push_str(&format!("OVERALL: {}\n", report.overall.label()));
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json() {
        let mut r = ScenarioReport::new("demo");
        r.check("one", Ok((true, "x1 in J".into())));
        assert!(render_report(&r, Format::Text).contains("OVERALL: PASS"));
        r.check("two", Ok((false, "nope".into())));
        assert!(!r.passed());
        let json = render_report(&r, Format::Json);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["overall"], "fail");
        assert_eq!(value["checks"][1]["verdict"], "fail");
        let back: ScenarioReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.checks, r.checks);
    }
}
