//! Verification reports and their JSON/CSV forms.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::AppError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Reported without a pass/fail claim.
    Info,
    /// The computation behind the check failed numerically.
    Error,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Info => "info",
            Verdict::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: Option<f64>,
    pub benchmark: Option<f64>,
    pub margin: Option<f64>,
    pub tolerance: Option<f64>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, value: f64, verdict: Verdict) -> Self {
        Self { name: name.into(), value: Some(value), benchmark: None, margin: None, tolerance: None, verdict, note: None }
    }

    /// `|value − benchmark| ≤ tol`, with margin `tol − |value − benchmark|`.
    pub fn close(name: impl Into<String>, value: f64, benchmark: f64, tol: f64) -> Self {
        let err = (value - benchmark).abs();
        Self {
            name: name.into(),
            value: Some(value),
            benchmark: Some(benchmark),
            margin: Some(tol - err),
            tolerance: Some(tol),
            verdict: Verdict::from_bool(err <= tol),
            note: None,
        }
    }

    /// `value ≤ bound`, with margin `bound − value`.
    pub fn at_most(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Self {
            name: name.into(),
            value: Some(value),
            benchmark: Some(bound),
            margin: Some(bound - value),
            tolerance: None,
            verdict: Verdict::from_bool(value <= bound),
            note: None,
        }
    }

    pub fn flag(name: impl Into<String>, ok: bool) -> Self {
        Self::new(name, if ok { 1.0 } else { 0.0 }, Verdict::from_bool(ok))
    }

    pub fn info(name: impl Into<String>, value: f64) -> Self {
        Self::new(name, value, Verdict::Info)
    }

    pub fn error(name: impl Into<String>, err: &dyn std::fmt::Display) -> Self {
        Self {
            name: name.into(),
            value: None,
            benchmark: None,
            margin: None,
            tolerance: None,
            verdict: Verdict::Error,
            note: Some(err.to_string()),
        }
    }

    pub fn with_benchmark(mut self, benchmark: f64) -> Self {
        self.benchmark = Some(benchmark);
        if let Some(v) = self.value {
            self.margin.get_or_insert(v - benchmark);
        }
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Result of one scenario.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub scenario: String,
    /// Input name to description and content digest.
    pub inputs: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    /// What the finite model cannot witness.
    pub limitations: Vec<String>,
    /// Wall-clock seconds; only recorded on request, to keep reports
    /// reproducible byte for byte.
    pub runtime_secs: Option<f64>,
}

impl ScenarioReport {
    pub fn new(scenario: &str) -> Self {
        Self { scenario: scenario.into(), ..Default::default() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Records `f()` or, if it fails, an error check named `name`.
    pub fn attempt<T>(&mut self, name: &str, f: impl FnOnce() -> fbcalc_core::Result<T>) -> Option<T> {
        match f() {
            Ok(v) => Some(v),
            Err(e) => {
                self.push(Check::error(name, &e));
                None
            }
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| matches!(c.verdict, Verdict::Pass | Verdict::Info))
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub scenarios: Vec<ScenarioReport>,
}

impl VerificationReport {
    pub fn checks(&self) -> impl Iterator<Item = (&str, &Check)> {
        self.scenarios.iter().flat_map(|s| s.checks.iter().map(move |c| (s.scenario.as_str(), c)))
    }

    pub fn scenario(&self, id: &str) -> Option<&ScenarioReport> {
        self.scenarios.iter().find(|s| s.scenario == id)
    }

    /// 0 when every verdict passes, 3 on any numeric error, else 1.
    pub fn exit_code(&self) -> i32 {
        if self.checks().any(|(_, c)| c.verdict == Verdict::Error) {
            3
        } else if self.checks().any(|(_, c)| c.verdict == Verdict::Fail) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, AppError> {
        serde_json::from_str(text).map_err(|e| AppError::Input(e.to_string()))
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), AppError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["scenario", "check", "value", "benchmark", "margin", "verdict"])?;
        let num = |v: Option<f64>| v.map(|x| format!("{x:.16e}")).unwrap_or_default();
        for (scenario, c) in self.checks() {
            w.write_record([scenario, &c.name, &num(c.value), &num(c.benchmark), &num(c.margin), c.verdict.as_str()])?;
        }
        w.flush().map_err(|e| AppError::Io("csv".into(), e))?;
        Ok(())
    }

    pub fn emit(&self, format: Format, path: &Path) -> Result<(), AppError> {
        let io = |e| AppError::Io(path.display().to_string(), e);
        let file = std::fs::File::create(path).map_err(io)?;
        let mut buf = std::io::BufWriter::new(file);
        match format {
            Format::Json => {
                buf.write_all(self.to_json().as_bytes()).map_err(io)?;
                buf.write_all(b"\n").map_err(io)?;
            }
            Format::Csv => self.write_csv(&mut buf)?,
        }
        buf.flush().map_err(io)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut s = ScenarioReport::new("demo");
        s.inputs.insert("measure".into(), "two atoms".into());
        s.push(Check::close("rho", 0.25000000000000006, 0.25, 1e-4));
        s.push(Check::at_most("residual", 3.1e-12, 1e-7));
        s.push(Check::info("norm", 0.1 + 0.2));
        s.push(Check::error("broken", &"did not converge"));
        s.limitations.push("finite model".into());
        VerificationReport { scenarios: vec![s] }
    }

    #[test]
    fn json_round_trip_is_exact() {
        let r = sample();
        let back = VerificationReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), r.to_json());
    }

    #[test]
    fn empty_csv_has_header_only() {
        let mut out = Vec::new();
        VerificationReport::default().write_csv(&mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "scenario,check,value,benchmark,margin,verdict\n");
    }

    #[test]
    fn csv_rows_use_17_digits() {
        let mut out = Vec::new();
        sample().write_csv(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("demo,rho,2.5000000000000006e-1,2.5000000000000000e-1,"));
        assert!(lines[4].ends_with(",,,error"));
    }

    #[test]
    fn exit_codes() {
        let mut r = sample();
        assert_eq!(r.exit_code(), 3);
        r.scenarios[0].checks.pop();
        assert_eq!(r.exit_code(), 0);
        r.scenarios[0].push(Check::flag("x", false));
        assert_eq!(r.exit_code(), 1);
    }
}
