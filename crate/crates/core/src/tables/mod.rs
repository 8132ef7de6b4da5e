//! Homotopy groups of spheres and Stiefel manifolds, and suspension facts.
//!
//! Everything outside the loaded data degrades to `None` / `Truth::Unknown`.

mod loader;

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{FgAbelianGroup, GroupOrder};
use crate::truth::Truth;

pub use loader::parse_tables;

const BUNDLED: &str = include_str!("../../data/homotopy.tbl");

#[derive(Debug, Error)]
pub enum TableError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: record has no citation")]
    Uncited { line: usize },
    #[error("line {line}: duplicate record for {key}")]
    Duplicate { line: usize, key: String },
    #[error("pi_{m}(S^{n}) = {entry} disagrees with the stable stem {stem} (m <= 2n-2)")]
    Stability { m: u32, n: u32, entry: String, stem: String },
    #[error("pi_{m}(S^{n}) = {entry} is impossible: {reason}")]
    ImpossibleEntry { m: u32, n: u32, entry: String, reason: String },
    #[error("stem {k} = {group} is listed as 2-torsion")]
    TwoTorsion { k: u32, group: String },
    #[error("suspension record at ({m},{n}) contradicts a range rule: {reason}")]
    RangeConflict { m: u32, n: u32, reason: String },
    #[error("EHP order argument failed: {0}")]
    Ehp(String),
    #[error("cannot read table file {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Cited,
    Transcribed,
    Derived,
}

/// A table group together with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupEntry {
    pub group: FgAbelianGroup,
    pub source: String,
    pub provenance: Provenance,
}

impl GroupEntry {
    fn derived(group: FgAbelianGroup, source: impl Into<String>) -> Self {
        Self { group, source: source.into(), provenance: Provenance::Derived }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SuspensionKind {
    Injective,
    NonInjective,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuspensionRecord {
    pub kind: SuspensionKind,
    pub source: String,
}

/// A tri-valued table answer with the reason it was decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub value: Truth,
    pub reason: String,
}

impl Fact {
    fn new(value: Truth, reason: impl Into<String>) -> Self {
        Self { value, reason: reason.into() }
    }

    fn unknown() -> Self {
        Self::new(Truth::Unknown, "outside table coverage")
    }
}

/// Outcome of the exact-sequence counting argument
/// `A --E--> B --H--> C --P--> D --E--> ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhpArgument {
    pub orders: [u64; 4],
    pub first_e_injective: bool,
    pub second_e_injective: bool,
}

/// With `|A| = a`, `|B| = b`, `|C| = c` and exactness at `B`, `b = |im E| * |im H|`
/// with `|im E| <= a` and `|im H| <= c`. When `a * c = b` both bounds are tight:
/// the first `E` is injective, `H` is onto, so `P = 0` and the second `E` is
/// injective as well.
pub fn ehp_counting(a: u64, b: u64, c: u64) -> bool {
    a.checked_mul(c) == Some(b)
}

#[derive(Clone, Debug, Default)]
pub struct HomotopyTables {
    pub(crate) stems: BTreeMap<u32, GroupEntry>,
    pub(crate) spheres: BTreeMap<(u32, u32), GroupEntry>,
    pub(crate) stiefel: BTreeMap<(u32, u32, u32), GroupEntry>,
    pub(crate) e_records: BTreeMap<(u32, u32), SuspensionRecord>,
    pub(crate) einf_records: BTreeMap<(u32, u32), SuspensionRecord>,
    pub(crate) declared_two_torsion: BTreeSet<u32>,
}

static BUNDLED_TABLES: OnceLock<HomotopyTables> = OnceLock::new();

impl HomotopyTables {
    /// The tables shipped with the crate.
    pub fn bundled() -> &'static HomotopyTables {
        BUNDLED_TABLES.get_or_init(|| parse_tables(BUNDLED).expect("bundled tables are valid"))
    }

    pub fn bundled_text() -> &'static str {
        BUNDLED
    }

    pub fn from_path(path: &Path) -> Result<Self, TableError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| TableError::Io { path: path.display().to_string(), source })?;
        parse_tables(&text)
    }

    pub fn stem_range(&self) -> Option<(u32, u32)> {
        Some((*self.stems.keys().next()?, *self.stems.keys().next_back()?))
    }

    pub fn pi_stable(&self, k: u32) -> Option<FgAbelianGroup> {
        self.stems.get(&k).map(|e| e.group.clone())
    }

    pub fn stem_entry(&self, k: u32) -> Option<&GroupEntry> {
        self.stems.get(&k)
    }

    pub fn pi_sphere(&self, m: u32, n: u32) -> Option<FgAbelianGroup> {
        self.sphere_entry(m, n).map(|e| e.group)
    }

    pub fn sphere_entry(&self, m: u32, n: u32) -> Option<GroupEntry> {
        if m == 0 || n == 0 {
            return None;
        }
        if m < n {
            return Some(GroupEntry::derived(FgAbelianGroup::trivial(), format!("pi_{m}(S^{n}) = 0 below the dimension")));
        }
        if m == n {
            return Some(GroupEntry::derived(FgAbelianGroup::integers(), format!("pi_{n}(S^{n}) = Z (degree)")));
        }
        if n == 1 {
            return Some(GroupEntry::derived(FgAbelianGroup::trivial(), format!("pi_{m}(S^1) = 0 for m > 1")));
        }
        if m <= 2 * n - 2 {
            if let Some(stem) = self.stems.get(&(m - n)) {
                return Some(GroupEntry {
                    group: stem.group.clone(),
                    source: format!("stable range, pi^S_{} ({})", m - n, stem.source),
                    provenance: stem.provenance,
                });
            }
        }
        self.spheres.get(&(m, n)).cloned()
    }

    pub fn pi_stiefel(&self, m: u32, r: u32, k: u32) -> Option<FgAbelianGroup> {
        self.stiefel_entry(m, r, k).map(|e| e.group.clone())
    }

    pub fn stiefel_entry(&self, m: u32, r: u32, k: u32) -> Option<&GroupEntry> {
        self.stiefel.get(&(m, r, k))
    }

    pub fn two_torsion_stems(&self) -> BTreeSet<u32> {
        let mut set = self.declared_two_torsion.clone();
        set.extend(self.stems.iter().filter(|(_, e)| e.group.annihilated_by(2)).map(|(k, _)| *k));
        set
    }

    pub fn stem_is_2_torsion(&self, k: u32) -> Truth {
        match self.stems.get(&k) {
            Some(e) => Truth::from(e.group.annihilated_by(2)),
            None if self.declared_two_torsion.contains(&k) => Truth::Yes,
            None => Truth::Unknown,
        }
    }

    /// Source of both suspensions at `(m, n)`: `pi_{m-1}(S^{n-1})`.
    pub fn suspension_source(&self, m: u32, n: u32) -> Option<FgAbelianGroup> {
        if m < 2 || n < 2 {
            return None;
        }
        self.pi_sphere(m - 1, n - 1)
    }

    /// `E : pi_{m-1}(S^{n-1}) -> pi_m(S^n)`.
    pub fn suspension_e(&self, m: u32, n: u32) -> Fact {
        if n < 2 || m < n {
            return Fact::new(Truth::Yes, "trivial source below the dimension");
        }
        let source = self.suspension_source(m, n);
        if let Some(rec) = self.e_records.get(&(m, n)) {
            let value = match rec.kind {
                SuspensionKind::Injective => Truth::Yes,
                SuspensionKind::NonInjective => Truth::No,
                SuspensionKind::Trivial => Truth::from(source.as_ref().map(FgAbelianGroup::is_trivial)),
            };
            if value.is_known() {
                return Fact::new(value, rec.source.clone());
            }
        }
        let range = e_range_rule(m, n, source.as_ref());
        if range.value.is_known() {
            return range;
        }
        counting_no(source.as_ref(), self.pi_sphere(m, n).as_ref(), &format!("pi_{m}(S^{n})"))
    }

    pub fn suspension_e_injective(&self, m: u32, n: u32) -> Truth {
        self.suspension_e(m, n).value
    }

    /// Whether `E` at `(m, n)` is the zero map.
    pub fn suspension_e_trivial(&self, m: u32, n: u32) -> Fact {
        let source = self.suspension_source(m, n);
        let target = self.pi_sphere(m, n);
        if source.as_ref().is_some_and(FgAbelianGroup::is_trivial) {
            return Fact::new(Truth::Yes, format!("pi_{}(S^{}) = 0", m - 1, n - 1));
        }
        if let Some(rec) = self.e_records.get(&(m, n)) {
            if rec.kind == SuspensionKind::Trivial {
                return Fact::new(Truth::Yes, rec.source.clone());
            }
        }
        if let (Some(s), Some(t)) = (&source, &target) {
            if t.is_trivial() {
                return Fact::new(Truth::Yes, format!("pi_{m}(S^{n}) = 0"));
            }
            if s.is_finite() && t.is_torsion_free() {
                return Fact::new(Truth::Yes, format!("finite pi_{}(S^{}) into torsion-free pi_{m}(S^{n})", m - 1, n - 1));
            }
        }
        let inj = self.suspension_e(m, n);
        if inj.value.is_yes() && source.is_some_and(|s| !s.is_trivial()) {
            return Fact::new(Truth::No, inj.reason);
        }
        Fact::unknown()
    }

    /// `E∞ : pi_{m-1}(S^{n-1}) -> pi^S_{m-n}`.
    pub fn suspension_einf(&self, m: u32, n: u32) -> Fact {
        if n < 2 || m < n {
            return Fact::new(Truth::Yes, "trivial source below the dimension");
        }
        let source = self.suspension_source(m, n);
        if let Some(rec) = self.einf_records.get(&(m, n)) {
            let value = match rec.kind {
                SuspensionKind::Injective => Truth::Yes,
                SuspensionKind::NonInjective => Truth::No,
                SuspensionKind::Trivial => Truth::from(source.as_ref().map(FgAbelianGroup::is_trivial)),
            };
            if value.is_known() {
                return Fact::new(value, rec.source.clone());
            }
        }
        let range = einf_range_rule(m, n, source.as_ref());
        if range.value.is_known() {
            return range;
        }
        counting_no(source.as_ref(), self.pi_stable(m - n).as_ref(), &format!("pi^S_{}", m - n))
    }

    pub fn suspension_einf_injective(&self, m: u32, n: u32) -> Truth {
        self.suspension_einf(m, n).value
    }

    /// Reruns the counting argument on the groups around `pi_8(S^4)`.
    pub fn ehp_order_check(&self) -> Result<EhpArgument, TableError> {
        let order = |m: u32, n: u32| -> Result<u64, TableError> {
            match self.pi_sphere(m, n).map(|g| g.order()) {
                Some(GroupOrder::Finite(o)) => Ok(o),
                Some(GroupOrder::Infinite) => Err(TableError::Ehp(format!("pi_{m}(S^{n}) is infinite"))),
                None => Err(TableError::Ehp(format!("pi_{m}(S^{n}) is not tabulated"))),
            }
        };
        let orders = [order(7, 3)?, order(8, 4)?, order(8, 7)?, order(6, 3)?];
        let tight = ehp_counting(orders[0], orders[1], orders[2]);
        Ok(EhpArgument { orders, first_e_injective: tight, second_e_injective: tight })
    }
}

/// Range rules for `E`, independent of explicit records.
pub(crate) fn e_range_rule(m: u32, n: u32, source: Option<&FgAbelianGroup>) -> Fact {
    if m == n {
        return Fact::new(Truth::Yes, "E is an isomorphism on pi_{n-1}(S^{n-1}) = Z");
    }
    if m + 3 <= 2 * n {
        return Fact::new(Truth::Yes, format!("Freudenthal range m <= 2n-3 ({m} <= {})", 2 * n - 3));
    }
    if source.is_some_and(FgAbelianGroup::is_trivial) {
        return Fact::new(Truth::Yes, format!("pi_{}(S^{}) = 0", m - 1, n - 1));
    }
    if n.is_multiple_of(2) && (m <= n + 3 || (m == n + 4 && m != 10)) {
        return Fact::new(Truth::Yes, format!("n even and m <= n+3 or m = n+4 != 10 (m={m}, n={n})"));
    }
    Fact::unknown()
}

/// Range rules for `E∞`, independent of explicit records.
pub(crate) fn einf_range_rule(m: u32, n: u32, source: Option<&FgAbelianGroup>) -> Fact {
    if m + 3 <= 2 * n {
        return Fact::new(Truth::Yes, format!("stable range m <= 2n-3 ({m} <= {})", 2 * n - 3));
    }
    if source.is_some_and(FgAbelianGroup::is_trivial) {
        return Fact::new(Truth::Yes, format!("pi_{}(S^{}) = 0", m - 1, n - 1));
    }
    if n.is_multiple_of(2) && (m <= n + 3 || (m == n + 4 && m != 8 && m != 10)) {
        return Fact::new(Truth::Yes, format!("n even and m <= n+3 or m = n+4 not in {{8,10}} (m={m}, n={n})"));
    }
    Fact::unknown()
}

/// A nontrivial finite group cannot inject into a trivial or torsion-free
/// one, and an infinite group cannot inject into a finite one.
fn counting_no(source: Option<&FgAbelianGroup>, target: Option<&FgAbelianGroup>, target_name: &str) -> Fact {
    let (Some(s), Some(t)) = (source, target) else {
        return Fact::unknown();
    };
    if s.is_trivial() {
        return Fact::new(Truth::Yes, "trivial source");
    }
    if s.is_finite() && t.is_torsion_free() {
        return Fact::new(Truth::No, format!("nontrivial finite source {s} into {target_name} = {t}"));
    }
    if !s.is_finite() && t.is_finite() {
        return Fact::new(Truth::No, format!("infinite source {s} into finite {target_name} = {t}"));
    }
    Fact::unknown()
}
