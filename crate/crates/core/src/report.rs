//! Machine-readable and text reports.
//!
//! JSON output is deterministic: verdicts are sorted by case label, order and
//! name, maps are not used for dynamic keys, and nothing time-dependent is
//! recorded.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::params::Mode;
use crate::verify::case_hc::{self, EXPECTED_SURVIVORS};
use crate::verify::citations::CaseLabel;
use crate::verify::cutoffs::{hc_cutoffs, hs_cutoffs, CutoffValue, FamilyCutoff};
use crate::verify::{case_hs, CaseVerdict, Run, VerifyError};

pub const TOOL_VERSION: &str = concat!("hgq ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReportMode {
    HS,
    HC,
    Geometry,
    Solve,
    GroupInfo,
    Enumerate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub candidates_examined: usize,
    pub survivors_pre_elimination: usize,
    pub survivors_post_elimination: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub mode: ReportMode,
    pub tool_version: &'static str,
    pub verdicts: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
    pub discrepancy_notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub scope_notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cutoffs: Vec<FamilyCutoff>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    pub success: bool,
    #[serde(skip)]
    text: String,
}

const HC_SCOPE: &str = "HC is checked for M = T^2 only; for k >= 3 the argument is structural and has no finite computation";

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialise")
}

impl VerificationReport {
    /// Report for a non-engine command; `text` is its rendered text form.
    pub fn plain<T: Serialize>(mode: ReportMode, entries: &[T], text: String, failures: Vec<String>) -> VerificationReport {
        VerificationReport {
            mode,
            tool_version: TOOL_VERSION,
            verdicts: entries.iter().map(to_value).collect(),
            summary: None,
            discrepancy_notes: Vec::new(),
            scope_notes: Vec::new(),
            cutoffs: Vec::new(),
            success: failures.is_empty(),
            failures,
            text,
        }
    }

    /// Report for an engine run. `full` marks an unfiltered run, which also
    /// re-derives the family cutoffs and requires the exact survivor set.
    pub fn from_run(run: &Run, full: bool) -> Result<VerificationReport, VerifyError> {
        let mut failures = Vec::new();
        let check = match run.mode {
            Mode::HS => case_hs::check_hs(run),
            Mode::HC => case_hc::check_hc(run, full),
        };
        if let Err(e) = check {
            failures.push(e.to_string());
        }
        let cutoffs = match (full, run.mode) {
            (false, _) => Vec::new(),
            (true, Mode::HS) => hs_cutoffs()?,
            (true, Mode::HC) => hc_cutoffs()?,
        };
        for c in cutoffs.iter().filter(|c| !c.matches) {
            failures.push(format!("{} cutoff for {}: stated {}, derived {}", run.mode, c.family, value(&c.stated), value(&c.derived)));
        }
        let scope_notes = match run.mode {
            Mode::HS => Vec::new(),
            Mode::HC => vec![HC_SCOPE.to_string()],
        };
        let mut report = VerificationReport {
            mode: match run.mode {
                Mode::HS => ReportMode::HS,
                Mode::HC => ReportMode::HC,
            },
            tool_version: TOOL_VERSION,
            verdicts: run.verdicts.iter().map(to_value).collect(),
            summary: Some(Summary {
                candidates_examined: run.verdicts.len(),
                survivors_pre_elimination: run.survivors_pre_elimination,
                survivors_post_elimination: run.survivors_post_elimination,
            }),
            discrepancy_notes: run.discrepancy_notes(),
            scope_notes,
            cutoffs,
            success: failures.is_empty(),
            failures,
            text: String::new(),
        };
        report.text = render_run(run, &report);
        Ok(report)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        self.text.clone()
    }
}

fn value(v: &CutoffValue) -> String {
    match v {
        CutoffValue::Max(m) => format!("<= {m}"),
        CutoffValue::Set(s) => format!("{s:?}"),
    }
}

fn verdict_line(v: &CaseVerdict) -> String {
    let outcome = match &v.eliminated_by {
        Some(e) => e.name().to_string(),
        None if v.is_survivor() => "SURVIVES".to_string(),
        None => "-".to_string(),
    };
    let mut line = format!("  {:<16} |T| = {}  |Out| = {}", v.group.id.to_string(), v.group.order, v.group.out_order);
    if v.out_used != v.group.out_order {
        let _ = write!(line, " (bounds at {})", v.out_used);
    }
    let _ = write!(line, "  s_max = {}  -> {outcome}", v.bounds.s_max());
    if !v.witnesses.is_empty() {
        let ws: Vec<String> = v.witnesses.iter().map(|w| w.to_string()).collect();
        let _ = write!(line, "  witnesses {}", ws.join(" "));
    }
    line
}

fn render_run(run: &Run, report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} verification ({})", run.mode, TOOL_VERSION);
    for label in CaseLabel::all(run.mode) {
        let vs: Vec<&CaseVerdict> = run.verdicts.iter().filter(|v| v.paper_case_label == label).collect();
        if vs.is_empty() {
            continue;
        }
        let _ = writeln!(out, "\n{label}");
        for v in vs {
            let _ = writeln!(out, "{}", verdict_line(v));
            for n in &v.notes {
                let _ = writeln!(out, "      {n}");
            }
        }
    }
    if let Some(s) = &report.summary {
        let _ = writeln!(
            out,
            "\nSummary: {} candidates, {} survivors before elimination, {} after",
            s.candidates_examined, s.survivors_pre_elimination, s.survivors_post_elimination
        );
    }
    if run.mode == Mode::HC {
        let expected: Vec<String> = EXPECTED_SURVIVORS.iter().map(|(g, s, y)| format!("{g} (s={s}, y={y})")).collect();
        let _ = writeln!(out, "Expected survivors: {}", expected.join(", "));
    }
    if !report.cutoffs.is_empty() {
        let _ = writeln!(out, "\nFamily cutoffs");
        for c in &report.cutoffs {
            let _ = writeln!(
                out,
                "  {:<12} {} stated {}, derived {} ({}) [{}]",
                c.family,
                c.parameter,
                value(&c.stated),
                value(&c.derived),
                c.criterion,
                if c.matches { "match" } else { "MISMATCH" }
            );
        }
    }
    for (title, notes) in [("Discrepancies", &report.discrepancy_notes), ("Scope", &report.scope_notes), ("Failures", &report.failures)] {
        if !notes.is_empty() {
            let _ = writeln!(out, "\n{title}");
            for n in notes {
                let _ = writeln!(out, "  {n}");
            }
        }
    }
    let _ = writeln!(out, "\nResult: {}", if report.success { "PASS" } else { "FAIL" });
    out
}
