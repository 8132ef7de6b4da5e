//! Concrete evaluation of the coincidence invariants in the computable cases.
//!
//! Every evaluator collects the verdicts of several independent routes
//! (general vanishing facts, the degree, the Hopf invariant, the boundary
//! class, the collapse class). Decided routes must agree; a disagreement is
//! reported as inconsistent input.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{AbelianError, FgAbelianGroup, GroupElement};
use crate::manifold::{punctured_inclusion_onto, w1_not_injective, Cardinality, ManifoldDescriptor};
use crate::tables::HomotopyTables;
use crate::truth::Truth;

const BOUNDARY_IDENTITY: &str = "omega(f,f) = chi(N) omega(f,y0) = omega(f,y0) + Einf(coll_*[f]) = ±Einf(boundary[f])";
const UNDERLINE_IDENTITY: &str = "omega_(f,f) = ±E(boundary[f])";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalcError {
    #[error("`{rep}` class is not valid here: {reason}")]
    Representation { rep: &'static str, reason: String },
    #[error("{carrier} is not tabulated, so a `{rep}` class cannot be checked")]
    Untabulated { rep: &'static str, carrier: String },
    #[error("bad coordinates for {carrier}: {source}")]
    Coordinates { carrier: String, source: AbelianError },
    #[error("inconsistent input, violates {identity}: {detail}")]
    Inconsistent { identity: &'static str, detail: String },
    #[error("the cardinality of pi1(N) is unknown")]
    UnknownPi1,
}

/// How a homotopy class `[f] ∈ pi_m(N)` is described.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "rep", rename_all = "lowercase")]
pub enum MapRep {
    Zero,
    /// Degree of (a lift to) `S^n -> S^n`, `m = n`.
    Degree { d: i64 },
    /// Hopf invariant of (a lift to) `S^{2n-1} -> S^n`.
    Hopf { h: i64 },
    /// The boundary class in `pi_{m-1}(S^{n-1})`.
    Boundary { coords: Vec<i64> },
    /// The collapse class in `pi_m(S^n)`.
    Collapse { coords: Vec<i64> },
    /// Quantified placeholder.
    Opaque,
}

impl MapRep {
    pub fn name(&self) -> &'static str {
        match self {
            MapRep::Zero => "zero",
            MapRep::Degree { .. } => "degree",
            MapRep::Hopf { .. } => "hopf",
            MapRep::Boundary { .. } => "boundary",
            MapRep::Collapse { .. } => "collapse",
            MapRep::Opaque => "opaque",
        }
    }
}

impl fmt::Display for MapRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |c: &[i64]| c.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        match self {
            MapRep::Zero => f.write_str("zero"),
            MapRep::Degree { d } => write!(f, "degree {d}"),
            MapRep::Hopf { h } => write!(f, "hopf {h}"),
            MapRep::Boundary { coords } => write!(f, "boundary ({})", list(coords)),
            MapRep::Collapse { coords } => write!(f, "collapse ({})", list(coords)),
            MapRep::Opaque => f.write_str("opaque"),
        }
    }
}

/// A map class: a primary representation, optional extra facets used for
/// consistency checks, and the user-supplied `j_* ∘ boundary` flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MapClassDescriptor {
    #[serde(flatten)]
    pub rep: MapRep,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub collapse: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Truth::is_unknown")]
    pub j_boundary_zero: Truth,
}

impl From<MapRep> for MapClassDescriptor {
    fn from(rep: MapRep) -> Self {
        Self { rep, boundary: None, collapse: None, j_boundary_zero: Truth::Unknown }
    }
}

impl MapClassDescriptor {
    pub fn zero() -> Self {
        MapRep::Zero.into()
    }

    pub fn degree(d: i64) -> Self {
        MapRep::Degree { d }.into()
    }

    pub fn hopf(h: i64) -> Self {
        MapRep::Hopf { h }.into()
    }

    pub fn boundary(coords: Vec<i64>) -> Self {
        MapRep::Boundary { coords }.into()
    }

    pub fn collapse(coords: Vec<i64>) -> Self {
        MapRep::Collapse { coords }.into()
    }

    pub fn opaque() -> Self {
        MapRep::Opaque.into()
    }

    pub fn is_opaque(&self) -> bool {
        self.rep == MapRep::Opaque
    }

    pub fn is_zero_rep(&self) -> bool {
        matches!(self.rep, MapRep::Zero | MapRep::Degree { d: 0 })
    }

    fn boundary_coords(&self) -> Option<&[i64]> {
        match &self.rep {
            MapRep::Boundary { coords } => Some(coords),
            _ => self.boundary.as_deref(),
        }
    }

    fn collapse_coords(&self) -> Option<&[i64]> {
        match &self.rep {
            MapRep::Collapse { coords } => Some(coords),
            _ => self.collapse.as_deref(),
        }
    }
}

impl fmt::Display for MapClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Zero,
    Nonzero,
    Unknown,
}

impl Status {
    /// `Truth` of the statement "the invariant vanishes".
    pub fn vanishes(self) -> Truth {
        match self {
            Status::Zero => Truth::Yes,
            Status::Nonzero => Truth::No,
            Status::Unknown => Truth::Unknown,
        }
    }

    fn from_zero(is_zero: bool) -> Self {
        if is_zero {
            Status::Zero
        } else {
            Status::Nonzero
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub carrier: String,
    pub element: GroupElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionValue {
    pub status: Status,
    pub witness: Option<Witness>,
    pub order_info: Option<u64>,
    pub reason: String,
}

impl ObstructionValue {
    fn zero(reason: impl Into<String>) -> Self {
        Self { status: Status::Zero, witness: None, order_info: None, reason: reason.into() }
    }

    fn nonzero(reason: impl Into<String>) -> Self {
        Self { status: Status::Nonzero, witness: None, order_info: None, reason: reason.into() }
    }

    fn unknown(reason: impl Into<String>) -> Self {
        Self { status: Status::Unknown, witness: None, order_info: None, reason: reason.into() }
    }

    fn with_witness(status: Status, carrier: String, element: GroupElement, reason: impl Into<String>) -> Self {
        Self { status, witness: Some(Witness { carrier, element }), order_info: None, reason: reason.into() }
    }

    pub fn is_decided(&self) -> bool {
        self.status != Status::Unknown
    }
}

fn sphere_group(tables: &HomotopyTables, m: u32, n: u32, rep: &'static str) -> Result<FgAbelianGroup, CalcError> {
    tables.pi_sphere(m, n).ok_or_else(|| CalcError::Untabulated { rep, carrier: format!("pi_{m}(S^{n})") })
}

fn element_in(group: &FgAbelianGroup, coords: &[i64], carrier: String) -> Result<GroupElement, CalcError> {
    group.element(coords.to_vec()).map_err(|source| CalcError::Coordinates { carrier, source })
}

fn boundary_element(tables: &HomotopyTables, m: u32, n: u32, coords: &[i64]) -> Result<GroupElement, CalcError> {
    let group = sphere_group(tables, m - 1, n - 1, "boundary")?;
    element_in(&group, coords, format!("pi_{}(S^{})", m - 1, n - 1))
}

fn collapse_element(tables: &HomotopyTables, m: u32, n: u32, coords: &[i64]) -> Result<GroupElement, CalcError> {
    let group = sphere_group(tables, m, n, "collapse")?;
    element_in(&group, coords, format!("pi_{m}(S^{n})"))
}

/// Checks that `class` makes sense as an element of `pi_m(N)`.
pub fn validate_class(desc: &ManifoldDescriptor, m: u32, class: &MapClassDescriptor, tables: &HomotopyTables) -> Result<(), CalcError> {
    let n = desc.dim();
    let bad = |rep: &'static str, reason: String| Err(CalcError::Representation { rep, reason });
    match &class.rep {
        MapRep::Degree { .. } => {
            if m != n {
                return bad("degree", format!("needs m = n (m={m}, n={n})"));
            }
            if !desc.is_sphere_or_rp() {
                return bad("degree", format!("needs N = S^n or RP(n), got {desc}"));
            }
        }
        MapRep::Hopf { .. } => {
            if m + 1 != 2 * n {
                return bad("hopf", format!("needs m = 2n-1 (m={m}, n={n})"));
            }
            if !desc.is_sphere_or_rp() {
                return bad("hopf", format!("needs N = S^n or RP(n), got {desc}"));
            }
            if n % 2 == 1 {
                return bad("hopf", format!("the Hopf invariant vanishes identically for odd n={n}"));
            }
        }
        MapRep::Zero | MapRep::Opaque | MapRep::Boundary { .. } | MapRep::Collapse { .. } => {}
    }
    if let Some(coords) = class.boundary_coords() {
        let e = boundary_element(tables, m, n, coords)?;
        if !e.is_zero() {
            let opaque = MapClassDescriptor::opaque();
            if let Some(v) = boundary_vanishing(desc, m, &opaque, tables)? {
                return bad("boundary", format!("not in the image of boundary, which vanishes here ({})", v.reason));
            }
            let u = omega_underline_self(desc, m, &opaque, tables)?;
            if u.status == Status::Zero && m >= n && tables.suspension_e_injective(m, n).is_yes() {
                return bad("boundary", format!("E(boundary[f]) = 0 for every f ({}) and E is injective", u.reason));
            }
            let st = omega_stable_self(desc, m, &opaque, tables)?;
            if st.status == Status::Zero && m >= n && tables.suspension_einf_injective(m, n).is_yes() {
                return bad("boundary", format!("Einf(boundary[f]) = 0 for every f ({}) and Einf is injective", st.reason));
            }
        }
    }
    if let Some(coords) = class.collapse_coords() {
        let c = collapse_element(tables, m, n, coords)?;
        let info = collapse_pushforward_trivial(desc, m, tables);
        if !c.is_zero() && info.coll.is_yes() {
            return bad("collapse", format!("not in the image of coll_*, which is trivial here ({})", info.reason));
        }
        if m <= 2 * n - 2 {
            if info.stable_composite.is_yes() && !c.is_zero() {
                return bad("collapse", format!("Einf o coll_* is trivial here ({})", info.reason));
            }
            if let Some(g) = info.annihilator {
                if !c.scale(g).is_zero() {
                    return bad("collapse", format!("{g} * coll_*[f] must vanish ({})", info.reason));
                }
            }
        }
    }
    Ok(())
}

/// Collects route verdicts and rejects disagreement.
struct Routes {
    identity: &'static str,
    decided: Option<ObstructionValue>,
    notes: Vec<String>,
}

impl Routes {
    fn new(identity: &'static str) -> Self {
        Self { identity, decided: None, notes: Vec::new() }
    }

    fn push(&mut self, value: ObstructionValue) -> Result<(), CalcError> {
        if !value.is_decided() {
            self.notes.push(value.reason);
            return Ok(());
        }
        match &mut self.decided {
            None => self.decided = Some(value),
            Some(prev) if prev.status != value.status => {
                return Err(CalcError::Inconsistent {
                    identity: self.identity,
                    detail: format!("`{}` gives {:?} but `{}` gives {:?}", prev.reason, prev.status, value.reason, value.status),
                })
            }
            Some(prev) => {
                if prev.witness.is_none() && value.witness.is_some() {
                    prev.witness = value.witness;
                }
            }
        }
        Ok(())
    }

    fn finish(self, fallback: &str) -> ObstructionValue {
        self.decided.unwrap_or_else(|| {
            let reason = if self.notes.is_empty() { fallback.to_string() } else { self.notes.join("; ") };
            ObstructionValue::unknown(reason)
        })
    }
}

fn sign_factor(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        2
    } else {
        0
    }
}

/// Routes that decide `boundary[f] = 0` itself.
fn boundary_vanishing(desc: &ManifoldDescriptor, m: u32, class: &MapClassDescriptor, tables: &HomotopyTables) -> Result<Option<ObstructionValue>, CalcError> {
    let n = desc.dim();
    if n % 2 == 1 {
        return Ok(Some(ObstructionValue::zero(format!("boundary vanishes for odd n={n}"))));
    }
    if desc.compact().is_no() {
        return Ok(Some(ObstructionValue::zero("N noncompact")));
    }
    if desc.euler() == Some(0) {
        return Ok(Some(ObstructionValue::zero("chi(N) = 0")));
    }
    if let Some(src) = tables.suspension_source(m, n) {
        if src.is_trivial() {
            return Ok(Some(ObstructionValue::zero(format!("pi_{}(S^{}) = 0", m - 1, n - 1))));
        }
    }
    if class.is_zero_rep() && !matches!(class.rep, MapRep::Degree { .. }) {
        return Ok(Some(ObstructionValue::zero("f is nullhomotopic")));
    }
    Ok(None)
}

/// Status of `boundary[f] ∈ pi_{m-1}(S^{n-1})`.
pub fn boundary_status(desc: &ManifoldDescriptor, m: u32, class: &MapClassDescriptor, tables: &HomotopyTables) -> Result<ObstructionValue, CalcError> {
    let n = desc.dim();
    let mut routes = Routes::new("boundary[f] consistency");
    if let Some(v) = boundary_vanishing(desc, m, class, tables)? {
        routes.push(v)?;
    }
    if let MapRep::Degree { d } = class.rep {
        let value = sign_factor(n) * d;
        let e = FgAbelianGroup::integers().element(vec![value]).expect("rank one");
        routes.push(ObstructionValue::with_witness(
            Status::from_zero(value == 0),
            format!("pi_{}(S^{})", n - 1, n - 1),
            e,
            format!("boundary of degree {d} is (1+(-1)^n)d = {value}"),
        ))?;
    }
    if let MapRep::Hopf { h } = class.rep {
        if (m, n) == (11, 6) {
            // pi_11(S^6) = Z is detected by H/2 and pi_10(V(7,2)) = 0, so boundary is onto Z/2
            let e = FgAbelianGroup::cyclic(2).element(vec![(h / 2).rem_euclid(2)]).expect("rank one");
            routes.push(ObstructionValue::with_witness(
                Status::from_zero(h % 4 == 0),
                "pi_10(S^5)".into(),
                e,
                format!("boundary onto pi_10(S^5) = Z/2 with kernel H = 0 mod 4 (H = {h})"),
            ))?;
        }
    }
    if let Some(coords) = class.boundary_coords() {
        let e = boundary_element(tables, m, n, coords)?;
        routes.push(ObstructionValue::with_witness(
            Status::from_zero(e.is_zero()),
            format!("pi_{}(S^{})", m - 1, n - 1),
            e,
            "given boundary class",
        ))?;
    }
    Ok(routes.finish("boundary class not determined"))
}

/// `omega_(f,f) = ±E(boundary[f]) ∈ pi_m(S^n)`; its vanishing is that of `omega#(f,f)`.
pub fn omega_underline_self(desc: &ManifoldDescriptor, m: u32, class: &MapClassDescriptor, tables: &HomotopyTables) -> Result<ObstructionValue, CalcError> {
    let n = desc.dim();
    let mut routes = Routes::new(UNDERLINE_IDENTITY);
    if let Some(v) = boundary_vanishing(desc, m, class, tables)? {
        routes.push(v)?;
    }
    if m >= n {
        let trivial = tables.suspension_e_trivial(m, n);
        if trivial.value.is_yes() {
            routes.push(ObstructionValue::zero(format!("E trivial at ({m},{n}): {}", trivial.reason)))?;
        }
    }
    if w1_not_injective(desc).is_yes() {
        routes.push(ObstructionValue::zero("w1 : pi1(N) -> Z/2 is not injective"))?;
    }
    if desc.fibration_with_section().is_yes() {
        routes.push(ObstructionValue::zero("N fibres with a section, so every pair is loose"))?;
    }
    if let MapRep::Degree { d } = class.rep {
        let value = sign_factor(n) * d;
        let e = FgAbelianGroup::integers().element(vec![value]).expect("rank one");
        routes.push(ObstructionValue::with_witness(
            Status::from_zero(value == 0),
            format!("pi_{n}(S^{n})"),
            e,
            format!("E(boundary) = (1+(-1)^n)d = {value}"),
        ))?;
    }
    let boundary = boundary_status(desc, m, class, tables)?;
    match boundary.status {
        Status::Zero => routes.push(ObstructionValue::zero(format!("boundary[f] = 0 ({})", boundary.reason)))?,
        Status::Nonzero if m >= n => {
            let e = tables.suspension_e(m, n);
            if e.value.is_yes() {
                routes.push(ObstructionValue::nonzero(format!("boundary[f] != 0 and E injective ({})", e.reason)))?;
            }
        }
        _ => {}
    }
    Ok(routes.finish("E(boundary[f]) not determined by the tables"))
}

/// Annihilating integer for the stable invariant of every pair:
/// `chi(N)` for orientable `N`, `chi(N) - 1` for nonorientable `N`.
pub fn stable_annihilator(desc: &ManifoldDescriptor) -> Option<i64> {
    if desc.pi1()? == Cardinality::Finite(1) {
        return None;
    }
    let chi = desc.euler()?;
    match desc.orientable() {
        Truth::Yes => Some(chi),
        Truth::No => Some(chi - 1),
        Truth::Unknown => None,
    }
}

/// Facts that make `omega(f1,f2)` vanish for every pair.
fn stable_pair_vanishing(desc: &ManifoldDescriptor, m: u32, tables: &HomotopyTables) -> ObstructionValue {
    let n = desc.dim();
    if m < n {
        return ObstructionValue::zero("m < n");
    }
    if desc.compact().is_no() {
        return ObstructionValue::zero("N noncompact");
    }
    if desc.pi1() == Some(Cardinality::Infinite) {
        return ObstructionValue::zero("pi1(N) infinite");
    }
    let stem = tables.pi_stable(m - n);
    if stem.as_ref().is_some_and(FgAbelianGroup::is_trivial) {
        return ObstructionValue::zero(format!("pi^S_{} = 0", m - n));
    }
    let k = desc.pi1().and_then(Cardinality::finite);
    if desc.orientable().is_no() && k.is_some_and(|k| k > 2) {
        return ObstructionValue::zero("N nonorientable with #pi1 > 2");
    }
    if desc.orientable().is_no() && k == Some(2) && tables.stem_is_2_torsion(m - n).is_yes() {
        return ObstructionValue::zero(format!("N nonorientable, #pi1 = 2 and 2 pi^S_{} = 0", m - n));
    }
    if let Some(g) = stable_annihilator(desc) {
        let label = if desc.orientable().is_yes() { "chi(N)" } else { "chi(N) - 1" };
        if g.abs() == 1 {
            return ObstructionValue::zero(format!("{label} = {g} annihilates omega"));
        }
        if let Some(stem) = &stem {
            if stem.multiplication_is_injective(g) {
                return ObstructionValue::zero(format!("{label} = {g} annihilates omega and acts injectively on pi^S_{} = {stem}", m - n));
            }
        }
        let mut v = ObstructionValue::unknown(format!("omega annihilated by {label} = {g}"));
        v.order_info = Some(g.unsigned_abs());
        return v;
    }
    ObstructionValue::unknown("no annihilation rule applies")
}

/// `omega(f1,f2) ∈ pi^S_{m-n}` for an arbitrary pair.
pub fn omega_stable_pair(
    desc: &ManifoldDescriptor,
    m: u32,
    f1: &MapClassDescriptor,
    f2: &MapClassDescriptor,
    tables: &HomotopyTables,
) -> ObstructionValue {
    let general = stable_pair_vanishing(desc, m, tables);
    if general.is_decided() {
        return general;
    }
    if f1.is_zero_rep() && f2.is_zero_rep() {
        return ObstructionValue::zero("both maps nullhomotopic");
    }
    if f1 == f2 && !f1.is_opaque() {
        if let Ok(v) = omega_stable_self(desc, m, f1, tables) {
            if v.is_decided() {
                return v;
            }
        }
    }
    general
}

/// `omega(f,f) = ±Einf(boundary[f]) ∈ pi^S_{m-n}`.
pub fn omega_stable_self(desc: &ManifoldDescriptor, m: u32, class: &MapClassDescriptor, tables: &HomotopyTables) -> Result<ObstructionValue, CalcError> {
    let n = desc.dim();
    let mut routes = Routes::new(BOUNDARY_IDENTITY);
    if let Some(v) = boundary_vanishing(desc, m, class, tables)? {
        routes.push(v)?;
    }
    let general = stable_pair_vanishing(desc, m, tables);
    let order_info = general.order_info;
    routes.push(general)?;
    if desc.pi1_nontrivial().is_yes() && m >= n && tables.stem_is_2_torsion(m - n).is_yes() {
        routes.push(ObstructionValue::zero(format!("omega(f,f) lies in 2 pi^S_{} = 0 (pi1 nontrivial)", m - n)))?;
    }
    if w1_not_injective(desc).is_yes() {
        routes.push(ObstructionValue::zero("w1 : pi1(N) -> Z/2 is not injective"))?;
    }
    let lifted = desc.is_sphere_or_rp() && n.is_multiple_of(2);
    if let MapRep::Degree { d } = class.rep {
        let value = sign_factor(n) * d;
        let e = FgAbelianGroup::integers().element(vec![value]).expect("rank one");
        routes.push(ObstructionValue::with_witness(Status::from_zero(value == 0), "pi^S_0".into(), e, format!("omega(f,f) = Einf((1+(-1)^n)d) = {value}")))?;
    }
    if let MapRep::Hopf { .. } = class.rep {
        if lifted && m >= n && tables.stem_is_2_torsion(m - n).is_yes() {
            routes.push(ObstructionValue::zero(format!("omega(f,f) = 2 Einf[f~] with 2 pi^S_{} = 0", m - n)))?;
        }
    }
    if let Some(coords) = class.boundary_coords() {
        let e = boundary_element(tables, m, n, coords)?;
        if e.is_zero() {
            routes.push(ObstructionValue::zero("given boundary class is 0"))?;
        } else {
            let einf = tables.suspension_einf(m, n);
            if einf.value.is_yes() {
                routes.push(ObstructionValue::nonzero(format!("given boundary class is nonzero and Einf injective ({})", einf.reason)))?;
            }
        }
    }
    if let Some(coords) = class.collapse_coords() {
        let c = collapse_element(tables, m, n, coords)?;
        let chi = desc.euler();
        if c.is_zero() && lifted && desc.is_sphere() {
            routes.push(ObstructionValue::zero("omega(f,f) = 2 Einf(coll_*[f]) with coll_*[f] = 0"))?;
        }
        if chi == Some(2) && desc.orientable().is_yes() && m <= 2 * n - 2 {
            // stable range: Einf is the identity on pi_m(S^n) = pi^S_{m-n}
            let doubled = c.scale(2);
            routes.push(ObstructionValue::with_witness(
                Status::from_zero(doubled.is_zero()),
                format!("pi^S_{}", m - n),
                doubled,
                "omega(f,f) = 2 Einf(coll_*[f]) (chi = 2)",
            ))?;
        }
    }
    let mut v = routes.finish("Einf(boundary[f]) not determined by the tables");
    if v.status == Status::Unknown {
        v.order_info = order_info;
    }
    Ok(v)
}

/// Status of the root invariant `deg#(f) = omega#(f, y0)`.
pub fn root_degree_status(desc: &ManifoldDescriptor, m: u32, class: &MapClassDescriptor, tables: &HomotopyTables) -> ObstructionValue {
    let n = desc.dim();
    if class.is_zero_rep() {
        return ObstructionValue::zero("f nullhomotopic");
    }
    if punctured_inclusion_onto(desc, m).is_yes() {
        return ObstructionValue::zero("i_* onto, every class lies in the image");
    }
    if !desc.is_sphere_or_rp() {
        return ObstructionValue::unknown("root exactness is used only for spheres and projective spaces");
    }
    // N - {pt} maps trivially on pi_m, so deg# is injective by exactness
    match &class.rep {
        MapRep::Degree { d } => ObstructionValue::from_class_zero(*d == 0, format!("deg# injective, [f] has degree {d}")),
        MapRep::Hopf { h } if *h != 0 => ObstructionValue::nonzero(format!("deg# injective, H(f~) = {h} != 0")),
        MapRep::Hopf { .. } => match tables.pi_sphere(m, n) {
            Some(g) if g == FgAbelianGroup::integers() => ObstructionValue::zero(format!("pi_{m}(S^{n}) = Z detected by H")),
            _ => ObstructionValue::unknown("H = 0 does not pin the class"),
        },
        _ => {
            if let Some(coords) = class.collapse_coords() {
                if let Ok(c) = collapse_element(tables, m, n, coords) {
                    if !c.is_zero() {
                        return ObstructionValue::nonzero("coll_*[f] != 0");
                    }
                    if desc.is_sphere() {
                        return ObstructionValue::zero("coll_* is the identity on S^n");
                    }
                }
            }
            if let Some(coords) = class.boundary_coords() {
                if boundary_element(tables, m, n, coords).is_ok_and(|e| !e.is_zero()) {
                    return ObstructionValue::nonzero("boundary[f] != 0 forces [f] != 0");
                }
            }
            ObstructionValue::unknown("class not pinned")
        }
    }
}

impl ObstructionValue {
    fn from_class_zero(zero: bool, reason: String) -> Self {
        if zero {
            Self::zero(reason)
        } else {
            Self::nonzero(reason)
        }
    }
}

/// `f1 - f2` when both use the same representation.
pub fn subtract_classes(f1: &MapClassDescriptor, f2: &MapClassDescriptor) -> Option<MapClassDescriptor> {
    let diff = |a: &[i64], b: &[i64]| (a.len() == b.len()).then(|| a.iter().zip(b).map(|(x, y)| x - y).collect::<Vec<_>>());
    let rep = match (&f1.rep, &f2.rep) {
        (_, MapRep::Zero) => f1.rep.clone(),
        (MapRep::Zero, MapRep::Degree { d }) => MapRep::Degree { d: -d },
        (MapRep::Zero, MapRep::Hopf { h }) => MapRep::Hopf { h: -h },
        (MapRep::Zero, MapRep::Boundary { coords }) => MapRep::Boundary { coords: coords.iter().map(|c| -c).collect() },
        (MapRep::Zero, MapRep::Collapse { coords }) => MapRep::Collapse { coords: coords.iter().map(|c| -c).collect() },
        (MapRep::Degree { d: a }, MapRep::Degree { d: b }) => MapRep::Degree { d: a - b },
        (MapRep::Hopf { h: a }, MapRep::Hopf { h: b }) => MapRep::Hopf { h: a - b },
        (MapRep::Boundary { coords: a }, MapRep::Boundary { coords: b }) => MapRep::Boundary { coords: diff(a, b)? },
        (MapRep::Collapse { coords: a }, MapRep::Collapse { coords: b }) => MapRep::Collapse { coords: diff(a, b)? },
        _ => return None,
    };
    if rep == MapRep::Opaque {
        return None;
    }
    Some(rep.into())
}

/// What is known about `coll_* : pi_m(N) -> pi_m(S^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseInfo {
    /// `coll_*` itself is trivial.
    pub coll: Truth,
    /// `Einf ∘ coll_*` is trivial.
    pub stable_composite: Truth,
    /// An integer known to annihilate `Einf ∘ coll_*`.
    pub annihilator: Option<i64>,
    pub reason: String,
}

pub fn collapse_pushforward_trivial(desc: &ManifoldDescriptor, m: u32, tables: &HomotopyTables) -> CollapseInfo {
    let n = desc.dim();
    let both = |reason: String| CollapseInfo { coll: Truth::Yes, stable_composite: Truth::Yes, annihilator: None, reason };
    if m < n {
        return both("pi_m(S^n) = 0 for m < n".into());
    }
    if tables.pi_sphere(m, n).is_some_and(|g| g.is_trivial()) {
        return both(format!("pi_{m}(S^{n}) = 0"));
    }
    // Einf : pi_m(S^n) -> pi^S_{m-n}
    let einf_injective = tables.suspension_einf_injective(m + 1, n + 1);
    let k = desc.pi1();
    let lift = |composite: Truth, annihilator: Option<i64>, reason: String| CollapseInfo {
        coll: if composite.is_yes() && einf_injective.is_yes() { Truth::Yes } else { Truth::Unknown },
        stable_composite: composite,
        annihilator,
        reason,
    };
    match (k, desc.orientable()) {
        (Some(Cardinality::Infinite), _) => lift(Truth::Yes, None, "pi1(N) infinite, all pairs loose".into()),
        (Some(Cardinality::Finite(k)), Truth::No) if k >= 2 => {
            lift(Truth::Yes, None, "N nonorientable: Einf(coll_*[f]) = 0".into())
        }
        (Some(Cardinality::Finite(k)), Truth::Yes) if k >= 2 => {
            let chi = desc.euler();
            let composite = match (chi, tables.pi_stable(m - n)) {
                (Some(c), _) if c.abs() == 1 => Truth::Yes,
                (Some(c), Some(stem)) if stem.multiplication_is_injective(c) => Truth::Yes,
                _ => Truth::Unknown,
            };
            lift(composite, chi, "chi(N) Einf(coll_*[f]) = 0".into())
        }
        _ => CollapseInfo { coll: Truth::Unknown, stable_composite: Truth::Unknown, annihilator: None, reason: "no rule applies".into() },
    }
}

/// Degree of `coll ∘ f` for a degree-`d` class.
pub fn collapse_degree(desc: &ManifoldDescriptor, d: i64) -> Option<i64> {
    let n = desc.dim();
    if desc.is_sphere() {
        Some(d)
    } else if desc.is_rp() {
        Some(if n % 2 == 1 { 2 * d } else { 0 })
    } else {
        None
    }
}

/// Possible Nielsen numbers of a root pair: all components vanish together.
pub fn nielsen_root_values(desc: &ManifoldDescriptor) -> Result<BTreeSet<u64>, CalcError> {
    match desc.pi1() {
        None => Err(CalcError::UnknownPi1),
        Some(Cardinality::Infinite) => Ok([0].into()),
        Some(Cardinality::Finite(k)) => Ok([0, k].into()),
    }
}

/// Nielsen number for `RP(n)`, `m = n` even, when the pair is built from
/// the covering projection (degree classes) and constants.
pub fn nielsen_number_special(desc: &ManifoldDescriptor, m: u32, f1: &MapClassDescriptor, f2: &MapClassDescriptor) -> Option<u64> {
    let n = desc.dim();
    if !desc.is_rp() || m != n || n % 2 == 1 {
        return None;
    }
    let degree = |f: &MapClassDescriptor| match f.rep {
        MapRep::Zero => Some(0),
        MapRep::Degree { d } => Some(d),
        _ => None,
    };
    match (degree(f1)?, degree(f2)?) {
        (0, 0) => Some(0),
        (a, b) if a == b => Some(1),
        (a, 0) | (0, a) if a != 0 => Some(2),
        _ => None,
    }
}

/// Whether `id + inv` is injective on `pi_n(S^n ∧ (ΩN)+)`.
pub fn ker_id_plus_inv_trivial(desc: &ManifoldDescriptor, m: u32) -> Truth {
    let n = desc.dim();
    if m != n || !desc.orientable().is_yes() || desc.pi1() != Some(Cardinality::Finite(2)) {
        return Truth::Unknown;
    }
    Truth::from(n.is_multiple_of(2))
}
