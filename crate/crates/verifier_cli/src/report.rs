use std::fmt::Write as _;

use duality_theorems::{CheckResult, Params, Status, Witness};
use exact_linalg::rat_to_string;
use serde::Serialize;

use crate::config::Config;

/// One checked identity with its timing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub result: CheckResult,
    pub ms: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub config: Config,
    pub rows: Vec<Row>,
    pub summary: Summary,
    pub elapsed_ms: u64,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    id: &'a str,
    params: &'a Params,
    status: &'static str,
    witnesses: &'a [Witness],
    residual: &'a str,
    ms: u64,
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    config: &'a Config,
    results: Vec<JsonRow<'a>>,
    summary: Summary,
    elapsed_ms: u64,
}

fn status_name(status: &Status) -> &'static str {
    match status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped(_) => "skip",
    }
}

impl Report {
    pub fn new(config: Config, rows: Vec<Row>, elapsed_ms: u64) -> Report {
        let mut summary = Summary::default();
        for row in &rows {
            match row.result.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped(_) => summary.skip += 1,
            }
        }
        Report {
            config,
            rows,
            summary,
            elapsed_ms,
        }
    }

    pub fn results(&self) -> impl Iterator<Item = &CheckResult> {
        self.rows.iter().map(|r| &r.result)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.all_passed())
    }

    pub fn to_json(&self) -> String {
        let results = self
            .rows
            .iter()
            .map(|row| {
                let r = &row.result;
                let note = match &r.status {
                    Status::Skipped(reason) => Some(reason.as_str()),
                    _ => r.note.as_deref(),
                };
                JsonRow {
                    id: r.id.as_str(),
                    params: &r.params,
                    status: status_name(&r.status),
                    witnesses: &r.witnesses,
                    residual: &r.residual,
                    ms: row.ms,
                    note,
                }
            })
            .collect();
        let report = JsonReport {
            config: &self.config,
            results,
            summary: self.summary,
            elapsed_ms: self.elapsed_ms,
        };
        serde_json::to_string_pretty(&report).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let r = &row.result;
            let _ = write!(out, "{} {:<18} {}", r.status.label(), r.id.as_str(), r.params);
            if !r.witnesses.is_empty() {
                let shown: Vec<String> = r
                    .witnesses
                    .iter()
                    .map(|w| format!("{}={}", w.name, rat_to_string(&w.value)))
                    .collect();
                let _ = write!(out, "  [{}]", shown.join(" "));
            }
            match &r.status {
                Status::Skipped(reason) => {
                    let _ = write!(out, "  ({reason})");
                }
                Status::Fail => {
                    let _ = write!(out, "  residual {}", r.residual);
                    if let Some(note) = &r.note {
                        let _ = write!(out, "  {note}");
                    }
                }
                Status::Pass => {}
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} skipped",
            self.summary.pass, self.summary.fail, self.summary.skip
        );
        out
    }
}
