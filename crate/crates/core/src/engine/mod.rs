//! Tri-valued forward chaining over the looseness statements of a pair.

mod catalog;
mod rules;
mod verdict;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use catalog::{rule, RuleInfo, RULES};
pub use verdict::{Conclusion, NielsenValue, Statement, TraceStep, Verdict};

use crate::calculus::{validate_class, CalcError, MapClassDescriptor, MapRep};
use crate::manifold::ManifoldDescriptor;
use crate::tables::HomotopyTables;
use crate::truth::Truth;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    #[serde(rename = "self")]
    SelfPair,
    Root,
    General,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::SelfPair => "self",
            PairKind::Root => "root",
            PairKind::General => "general",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantifier {
    Given,
    Forall,
    Exists,
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantifier::Given => "given",
            Quantifier::Forall => "forall",
            Quantifier::Exists => "exists",
        })
    }
}

/// A question about the pair `(f1, f2) : S^m -> N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairQuery {
    pub id: Option<String>,
    pub manifold: ManifoldDescriptor,
    pub m: u32,
    pub kind: PairKind,
    pub quantifier: Quantifier,
    pub f1: MapClassDescriptor,
    pub f2: MapClassDescriptor,
}

impl PairQuery {
    /// A quantified query; the classes are placeholders.
    pub fn new(manifold: ManifoldDescriptor, m: u32, kind: PairKind, quantifier: Quantifier) -> Self {
        let f2 = if kind == PairKind::Root { MapClassDescriptor::zero() } else { MapClassDescriptor::opaque() };
        Self { id: None, manifold, m, kind, quantifier, f1: MapClassDescriptor::opaque(), f2 }
    }

    pub fn selfpair(manifold: ManifoldDescriptor, m: u32, f: MapClassDescriptor) -> Self {
        Self { id: None, manifold, m, kind: PairKind::SelfPair, quantifier: Quantifier::Given, f1: f.clone(), f2: f }
    }

    pub fn root(manifold: ManifoldDescriptor, m: u32, f: MapClassDescriptor) -> Self {
        Self { id: None, manifold, m, kind: PairKind::Root, quantifier: Quantifier::Given, f1: f, f2: MapClassDescriptor::zero() }
    }

    pub fn general(manifold: ManifoldDescriptor, m: u32, f1: MapClassDescriptor, f2: MapClassDescriptor) -> Self {
        Self { id: None, manifold, m, kind: PairKind::General, quantifier: Quantifier::Given, f1, f2 }
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = Some(id.into());
        self
    }

    pub fn n(&self) -> u32 {
        self.manifold.dim()
    }

    pub fn validate(&self, tables: &HomotopyTables) -> Result<(), EngineError> {
        let invalid = |msg: String| Err(EngineError::InvalidQuery(msg));
        if self.m < 2 {
            return invalid(format!("m = {} but m, n >= 2 is assumed", self.m));
        }
        if self.n() < 2 {
            return invalid(format!("n = {} but m, n >= 2 is assumed", self.n()));
        }
        match self.kind {
            PairKind::Root if self.f2 != MapClassDescriptor::zero() => return invalid("a root pair has f2 = zero".into()),
            PairKind::SelfPair if self.f1 != self.f2 => return invalid("a self pair has f1 = f2".into()),
            _ => {}
        }
        match self.quantifier {
            Quantifier::Given => {
                if self.f1.is_opaque() || self.f2.is_opaque() {
                    return invalid("`given` needs concrete map classes".into());
                }
                validate_class(&self.manifold, self.m, &self.f1, tables)?;
                validate_class(&self.manifold, self.m, &self.f2, tables)?;
            }
            Quantifier::Forall | Quantifier::Exists => {
                let placeholder = |f: &MapClassDescriptor| f.is_opaque() || (self.kind == PairKind::Root && f.rep == MapRep::Zero);
                if !placeholder(&self.f1) || !placeholder(&self.f2) {
                    return invalid(format!("`{}` queries take no concrete map classes", self.quantifier));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error(transparent)]
    Calculus(#[from] CalcError),
    #[error("inconsistent rule firing on {what}:\n  first:  {first}\n  second: {second}")]
    Inconsistent { what: String, first: String, second: String },
}

impl EngineError {
    /// Conflicts, as opposed to malformed input.
    pub fn is_inconsistency(&self) -> bool {
        matches!(self, EngineError::Inconsistent { .. } | EngineError::Calculus(CalcError::Inconsistent { .. }))
    }
}

/// A conclusion proposed by a rule.
#[derive(Clone, Debug)]
pub(crate) struct Firing {
    pub rule: &'static str,
    pub premises: Vec<String>,
    pub conclusion: Conclusion,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct State {
    pub stmts: [Truth; 7],
    setter: [Option<usize>; 7],
    pub sharp: Option<BTreeSet<u64>>,
    pub stable: Option<BTreeSet<u64>>,
    sharp_setter: Option<usize>,
    stable_setter: Option<usize>,
    pub collapse: Truth,
    collapse_setter: Option<usize>,
    trace: Vec<TraceStep>,
}

impl State {
    pub fn get(&self, s: Statement) -> Truth {
        self.stmts[s.index()]
    }

    fn step(firing: &Firing) -> TraceStep {
        let info = rule(firing.rule).unwrap_or_else(|| panic!("rule {} missing from the catalog", firing.rule));
        TraceStep {
            rule_id: info.id.to_string(),
            citation: info.citation.to_string(),
            quote: info.quote.to_string(),
            premises: firing.premises.clone(),
            conclusion: firing.conclusion.clone(),
        }
    }

    fn conflict(&self, what: String, setter: Option<usize>, step: &TraceStep) -> EngineError {
        let first = setter.map_or_else(|| "(seed)".to_string(), |i| self.trace[i].to_string());
        EngineError::Inconsistent { what, first, second: step.to_string() }
    }

    /// Applies a firing; returns whether anything changed.
    fn apply(&mut self, firing: &Firing, record: bool) -> Result<bool, EngineError> {
        let step = Self::step(firing);
        let index = self.trace.len();
        let changed = match &firing.conclusion {
            Conclusion::Statement { statement, value } => {
                let i = statement.index();
                match (self.stmts[i], *value) {
                    (_, Truth::Unknown) => false,
                    (Truth::Unknown, v) => {
                        self.stmts[i] = v;
                        self.setter[i] = Some(index);
                        true
                    }
                    (cur, v) if cur == v => false,
                    _ => return Err(self.conflict(format!("{statement} ({})", statement.description()), self.setter[i], &step)),
                }
            }
            Conclusion::NielsenSharp { values } | Conclusion::NielsenStable { values } => {
                let sharp = matches!(firing.conclusion, Conclusion::NielsenSharp { .. });
                let (slot, setter) = if sharp { (&self.sharp, self.sharp_setter) } else { (&self.stable, self.stable_setter) };
                let next: BTreeSet<u64> = match slot {
                    None => values.clone(),
                    Some(cur) => cur.intersection(values).copied().collect(),
                };
                if slot.as_ref() == Some(&next) {
                    false
                } else if next.is_empty() {
                    let what = if sharp { "N#" } else { "N" };
                    return Err(self.conflict(what.into(), setter, &step));
                } else {
                    if sharp {
                        self.sharp = Some(next);
                        self.sharp_setter = Some(index);
                    } else {
                        self.stable = Some(next);
                        self.stable_setter = Some(index);
                    }
                    true
                }
            }
            Conclusion::CollapseTrivial { value } => match (self.collapse, *value) {
                (_, Truth::Unknown) => false,
                (Truth::Unknown, v) => {
                    self.collapse = v;
                    self.collapse_setter = Some(index);
                    true
                }
                (cur, v) if cur == v => false,
                _ => return Err(self.conflict("coll_* triviality".into(), self.collapse_setter, &step)),
            },
        };
        if changed && record {
            self.trace.push(step);
        }
        Ok(changed)
    }

    fn from_verdict(v: &Verdict) -> Result<Self, EngineError> {
        let mut state = State::default();
        for step in &v.trace {
            let info = rule(&step.rule_id).ok_or_else(|| EngineError::InvalidQuery(format!("unknown rule id {}", step.rule_id)))?;
            let firing = Firing { rule: info.id, premises: step.premises.clone(), conclusion: step.conclusion.clone() };
            state.apply(&firing, false)?;
            state.trace.push(step.clone());
        }
        Ok(state)
    }
}

fn run(query: &PairQuery, tables: &HomotopyTables, mut state: State) -> Result<Verdict, EngineError> {
    query.validate(tables)?;
    let ctx = rules::Context::new(query, tables)?;
    let mut rounds = 0;
    loop {
        let mut changed = false;
        for (_, rule_fn) in rules::RULE_FNS {
            let mut out = Vec::new();
            rule_fn(&ctx, &state, &mut out);
            for firing in &out {
                debug_assert!(
                    query.kind == PairKind::SelfPair
                        || !matches!(firing.conclusion, Conclusion::Statement { statement, .. } if statement.self_only()),
                    "{} assigns a self-only statement",
                    firing.rule
                );
                changed |= state.apply(firing, true)?;
            }
        }
        rounds += 1;
        if !changed {
            break;
        }
        assert!(rounds < 64, "fixpoint did not converge");
    }
    Ok(finish(query, &ctx, state))
}

fn finish(query: &PairQuery, ctx: &rules::Context<'_>, state: State) -> Verdict {
    let statements = Statement::ALL.iter().map(|&s| (s, state.get(s))).collect();
    let nielsen_sharp = NielsenValue::from_candidates(state.sharp.as_ref());
    let nielsen_stable = NielsenValue::from_candidates(state.stable.as_ref());
    let mut notes = ctx.notes.clone();
    if query.kind != PairKind::SelfPair {
        notes.push("S1, S2 and S5 concern selfcoincidence pairs only".into());
    }
    if query.quantifier == Quantifier::Exists && state.trace.iter().any(|t| rules::EXISTENCE_RULES.contains(&t.rule_id.as_str())) {
        notes.push("a class with the stated properties exists".into());
    }
    if let Some(b) = nielsen_sharp.positive_lower_bound() {
        notes.push(format!(
            "lower bound: for every pair homotopic to (f1, f2) the coincidence set has at least {b} path components (N# >= {b})"
        ));
    }
    Verdict {
        id: query.id.clone(),
        manifold: query.manifold.to_string(),
        m: query.m,
        kind: query.kind.to_string(),
        quantifier: query.quantifier.to_string(),
        statements,
        nielsen_sharp,
        nielsen_stable,
        collapse_trivial: state.collapse,
        trace: state.trace,
        notes,
    }
}

/// Runs the rule set to a fixpoint.
pub fn evaluate(query: &PairQuery, tables: &HomotopyTables) -> Result<Verdict, EngineError> {
    run(query, tables, State::default())
}

/// Re-runs the rule set starting from the conclusions of an earlier verdict.
pub fn reevaluate(query: &PairQuery, tables: &HomotopyTables, previous: &Verdict) -> Result<Verdict, EngineError> {
    run(query, tables, State::from_verdict(previous)?)
}

pub fn evaluate_batch_sequential(queries: &[PairQuery], tables: &HomotopyTables) -> Vec<Result<Verdict, EngineError>> {
    queries.iter().map(|q| evaluate(q, tables)).collect()
}

#[cfg(feature = "parallel")]
pub fn evaluate_batch_parallel(queries: &[PairQuery], tables: &HomotopyTables) -> Vec<Result<Verdict, EngineError>> {
    use rayon::prelude::*;
    queries.par_iter().map(|q| evaluate(q, tables)).collect()
}

/// Order-preserving batch evaluation; parallel when the `parallel` feature is on.
pub fn evaluate_batch(queries: &[PairQuery], tables: &HomotopyTables) -> Vec<Result<Verdict, EngineError>> {
    #[cfg(feature = "parallel")]
    {
        evaluate_batch_parallel(queries, tables)
    }
    #[cfg(not(feature = "parallel"))]
    {
        evaluate_batch_sequential(queries, tables)
    }
}
