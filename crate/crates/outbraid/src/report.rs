use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: serde_json::Value,
    pub checks: Vec<Check>,
    pub counts: Counts,
    /// Seconds.
    pub wall_time: f64,
}

impl Report {
    /// `true` iff no check failed; skipped checks do not count against it.
    pub fn passed(&self) -> bool {
        self.counts.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Merges several reports into one named `suite`, keeping check order.
    pub fn merge(suite: &str, params: serde_json::Value, parts: Vec<Report>) -> Report {
        let mut checks = Vec::new();
        let mut wall_time = 0.0;
        for r in parts {
            wall_time += r.wall_time;
            checks.extend(r.checks.into_iter().map(|c| Check {
                name: format!("{}/{}", r.suite, c.name),
                ..c
            }));
        }
        Report {
            suite: suite.to_string(),
            params,
            counts: count(&checks),
            checks,
            wall_time,
        }
    }

    /// Plain-text table, one row per check.
    pub fn table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.chars().count())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = format!("suite {}  ({:.3} s)\n", self.suite, self.wall_time);
        out.push_str(&format!("{:<width$}  {:<7}  detail\n", "check", "status"));
        for c in &self.checks {
            out.push_str(&format!("{:<width$}  {:<7}  {}\n", c.name, c.status.to_string(), c.detail));
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped: {}\n",
            self.counts.pass,
            self.counts.fail,
            self.counts.skipped,
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

fn count(checks: &[Check]) -> Counts {
    let mut c = Counts::default();
    for k in checks {
        match k.status {
            Status::Pass => c.pass += 1,
            Status::Fail => c.fail += 1,
            Status::Skipped => c.skipped += 1,
        }
    }
    c
}

/// Accumulates checks for one suite run.
pub struct Recorder {
    suite: String,
    params: serde_json::Value,
    checks: Vec<Check>,
    start: Instant,
}

impl Recorder {
    pub fn new(suite: &str, params: serde_json::Value) -> Self {
        Recorder {
            suite: suite.to_string(),
            params,
            checks: Vec::new(),
            start: Instant::now(),
        }
    }

    pub fn record(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.record(name, status, detail);
    }

    /// Records an `Ok((ok, detail))` as pass or fail; an error fails the check,
    /// except an exhausted budget, which is reported as skipped.
    pub fn check_result<E: fmt::Display>(
        &mut self,
        name: impl Into<String>,
        r: Result<(bool, String), E>,
        budget_exhausted: impl Fn(&E) -> bool,
    ) {
        match r {
            Ok((ok, detail)) => self.check(name, ok, detail),
            Err(e) if budget_exhausted(&e) => self.record(name, Status::Skipped, e.to_string()),
            Err(e) => self.record(name, Status::Fail, format!("error: {e}")),
        }
    }

    pub fn skip(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.record(name, Status::Skipped, detail);
    }

    pub fn finish(self) -> Report {
        Report {
            suite: self.suite,
            params: self.params,
            counts: count(&self.checks),
            checks: self.checks,
            wall_time: self.start.elapsed().as_secs_f64(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_status() {
        let mut r = Recorder::new("demo", serde_json::json!({}));
        r.check("a", true, "");
        r.skip("b", "not requested");
        let rep = r.finish();
        assert_eq!(rep.counts, Counts { pass: 1, fail: 0, skipped: 1 });
        assert!(rep.passed());

        let mut r = Recorder::new("demo", serde_json::json!({}));
        r.skip("b", "");
        r.check("c", false, "wrong");
        let rep = r.finish();
        assert!(!rep.passed());
        assert!(rep.table().contains("FAIL"));
    }

    #[test]
    fn json_fields() {
        let mut r = Recorder::new("demo", serde_json::json!({"n": 4}));
        r.check("a", true, "ok");
        let v: serde_json::Value = serde_json::from_str(&r.finish().to_json()).unwrap();
        for key in ["suite", "params", "checks", "counts", "wall_time"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["checks"][0]["status"], "pass");
        assert_eq!(v["params"]["n"], 4);
    }

    #[test]
    fn errors_fail_unless_budget() {
        let mut r = Recorder::new("demo", serde_json::json!({}));
        r.check_result::<String>("x", Err("budget".into()), |e| e == "budget");
        r.check_result::<String>("y", Err("boom".into()), |e| e == "budget");
        let rep = r.finish();
        assert_eq!(rep.counts, Counts { pass: 0, fail: 1, skipped: 1 });
    }
}
