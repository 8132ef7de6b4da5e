//! Text and JSON reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::query::{Format, Options, VERSION};
use crate::engine::{Conclusion, EngineError, NielsenValue, Statement, Verdict};
use crate::Truth;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Evaluated { verdict: Verdict },
    Failed { id: Option<String>, inconsistency: bool, message: String },
}

impl Outcome {
    pub fn new(id: Option<String>, result: Result<Verdict, EngineError>) -> Self {
        match result {
            Ok(verdict) => Outcome::Evaluated { verdict },
            Err(e) => Outcome::Failed { id, inconsistency: e.is_inconsistency(), message: e.to_string() },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub results: Vec<Outcome>,
}

impl Report {
    pub fn new(results: Vec<Outcome>) -> Self {
        Self { version: VERSION.into(), results }
    }

    pub fn has_inconsistency(&self) -> bool {
        self.results.iter().any(|o| matches!(o, Outcome::Failed { inconsistency: true, .. }))
    }
}

pub fn emit_report(report: &Report, options: &Options) -> String {
    match options.format {
        Format::Json => {
            let mut out = serde_json::to_string_pretty(&strip(report, options.trace)).expect("reports always serialize");
            out.push('\n');
            out
        }
        Format::Text => text(report, options.trace),
    }
}

pub fn parse_report(text: &str) -> Result<Report, serde_json::Error> {
    serde_json::from_str(text)
}

fn strip(report: &Report, trace: bool) -> Report {
    let mut r = report.clone();
    if !trace {
        for o in &mut r.results {
            if let Outcome::Evaluated { verdict } = o {
                verdict.trace.clear();
            }
        }
    }
    r
}

fn rule_ids<'a>(steps: impl Iterator<Item = &'a crate::engine::TraceStep>) -> String {
    let mut ids: Vec<&str> = Vec::new();
    for s in steps {
        if !ids.contains(&s.rule_id.as_str()) {
            ids.push(&s.rule_id);
        }
    }
    ids.join(", ")
}

fn text(report: &Report, trace: bool) -> String {
    let mut out = format!("coincide report, version {}, {} queries\n", report.version, report.results.len());
    for (i, outcome) in report.results.iter().enumerate() {
        out.push('\n');
        match outcome {
            Outcome::Failed { id, inconsistency, message } => {
                let label = id.clone().unwrap_or_else(|| format!("#{}", i + 1));
                let what = if *inconsistency { "engine inconsistency" } else { "error" };
                let _ = writeln!(out, "== query {label}: {what}");
                for line in message.lines() {
                    let _ = writeln!(out, "  {line}");
                }
            }
            Outcome::Evaluated { verdict } => block(&mut out, i, verdict, trace),
        }
    }
    out
}

fn block(out: &mut String, i: usize, v: &Verdict, trace: bool) {
    let label = v.id.clone().unwrap_or_else(|| format!("#{}", i + 1));
    let _ = writeln!(out, "== query {label}: N = {}, m = {}, {} pair, {}", v.manifold, v.m, v.kind, v.quantifier);
    for s in Statement::ALL {
        let value = v.get(s);
        let mut line = format!("  {s}  {:<28} {:<8}", s.description(), value.label());
        if value.is_known() {
            let _ = write!(line, "[{}]", rule_ids(v.steps_for(s)));
            if let Some(step) = v.steps_for(s).next() {
                let _ = write!(line, " {}: \"{}\"", step.citation, step.quote);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let nielsen = |sharp: bool| {
        rule_ids(v.trace.iter().filter(move |t| match t.conclusion {
            Conclusion::NielsenSharp { .. } => sharp,
            Conclusion::NielsenStable { .. } => !sharp,
            _ => false,
        }))
    };
    for (name, value, sharp) in [("N#", &v.nielsen_sharp, true), ("N ", &v.nielsen_stable, false)] {
        let _ = write!(out, "  {name}  {value}");
        if *value != NielsenValue::Unknown {
            let _ = write!(out, " [{}]", nielsen(sharp));
        }
        out.push('\n');
    }
    if v.collapse_trivial != Truth::Unknown {
        let ids = rule_ids(v.trace.iter().filter(|t| matches!(t.conclusion, Conclusion::CollapseTrivial { .. })));
        let _ = writeln!(out, "  coll_* trivial: {} [{ids}]", v.collapse_trivial);
    }
    for note in &v.notes {
        let _ = writeln!(out, "  note: {note}");
    }
    if trace {
        let _ = writeln!(out, "  trace:");
        for (k, step) in v.trace.iter().enumerate() {
            let _ = writeln!(out, "    {:>2}. {step}", k + 1);
        }
    }
}
