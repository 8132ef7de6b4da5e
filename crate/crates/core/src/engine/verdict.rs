use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::truth::Truth;

/// The seven looseness statements about a pair `(f1, f2)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Statement {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
}

impl Statement {
    pub const ALL: [Statement; 7] = [Self::S1, Self::S2, Self::S3, Self::S4, Self::S5, Self::S6, Self::S7];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn description(self) -> &'static str {
        match self {
            Self::S1 => "boundary[f] = 0",
            Self::S2 => "loose by small deformation",
            Self::S3 => "loose",
            Self::S4 => "omega# = 0",
            Self::S5 => "E(boundary[f]) = 0",
            Self::S6 => "omega~ = 0",
            Self::S7 => "omega = 0",
        }
    }

    /// Statements that only make sense for selfcoincidence pairs.
    pub fn self_only(self) -> bool {
        matches!(self, Self::S1 | Self::S2 | Self::S5)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// What a trace step concluded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Conclusion {
    Statement { statement: Statement, value: Truth },
    NielsenSharp { values: BTreeSet<u64> },
    NielsenStable { values: BTreeSet<u64> },
    CollapseTrivial { value: Truth },
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |v: &BTreeSet<u64>| v.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
        match self {
            Conclusion::Statement { statement, value } => write!(f, "{statement} = {value}"),
            Conclusion::NielsenSharp { values } => write!(f, "N# in {{{}}}", set(values)),
            Conclusion::NielsenStable { values } => write!(f, "N in {{{}}}", set(values)),
            Conclusion::CollapseTrivial { value } => write!(f, "coll_* trivial = {value}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule_id: String,
    pub citation: String,
    pub quote: String,
    pub premises: Vec<String>,
    pub conclusion: Conclusion,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} ({}, \"{}\")", self.rule_id, self.conclusion, self.citation, self.quote)?;
        if !self.premises.is_empty() {
            write!(f, " from: {}", self.premises.join("; "))?;
        }
        Ok(())
    }
}

/// A Nielsen number: decided, narrowed to a set, or unconstrained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NielsenValue {
    Exact(u64),
    OneOf(BTreeSet<u64>),
    Unknown,
}

impl NielsenValue {
    pub fn from_candidates(c: Option<&BTreeSet<u64>>) -> Self {
        match c {
            None => Self::Unknown,
            Some(set) if set.len() == 1 => Self::Exact(*set.iter().next().expect("one element")),
            Some(set) => Self::OneOf(set.clone()),
        }
    }

    pub fn exact(&self) -> Option<u64> {
        match self {
            Self::Exact(v) => Some(*v),
            _ => None,
        }
    }

    /// Smallest possible value, when known to be positive.
    pub fn positive_lower_bound(&self) -> Option<u64> {
        match self {
            Self::Exact(v) if *v > 0 => Some(*v),
            Self::OneOf(set) if !set.contains(&0) => set.iter().next().copied(),
            _ => None,
        }
    }
}

impl fmt::Display for NielsenValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(v) => write!(f, "{v}"),
            Self::OneOf(set) => {
                let items: Vec<_> = set.iter().map(u64::to_string).collect();
                write!(f, "one of {{{}}}", items.join(", "))
            }
            Self::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub manifold: String,
    pub m: u32,
    pub kind: String,
    pub quantifier: String,
    pub statements: BTreeMap<Statement, Truth>,
    pub nielsen_sharp: NielsenValue,
    pub nielsen_stable: NielsenValue,
    pub collapse_trivial: Truth,
    pub trace: Vec<TraceStep>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn get(&self, s: Statement) -> Truth {
        self.statements.get(&s).copied().unwrap_or_default()
    }

    /// Trace steps concluding `s`.
    pub fn steps_for(&self, s: Statement) -> impl Iterator<Item = &TraceStep> {
        self.trace
            .iter()
            .filter(move |t| matches!(t.conclusion, Conclusion::Statement { statement, .. } if statement == s))
    }
}
