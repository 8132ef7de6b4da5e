//! Target manifolds: named families plus user-described generic manifolds.
//!
//! A descriptor records only what the rules consume: dimension, the
//! cardinality of the fundamental group, orientability, compactness, the
//! Euler characteristic and a few tri-valued flags.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::truth::Truth;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ManifoldError {
    #[error("{family} needs {requirement} (got {got})")]
    OutOfRange { family: &'static str, requirement: &'static str, got: String },
    #[error("dimension {0} is below 2")]
    DimensionTooSmall(u32),
    #[error("a product needs at least two factors")]
    ProductArity,
    #[error("inconsistent manifold data: {0}")]
    Inconsistent(String),
}

/// Cardinality of the fundamental group.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cardinality {
    Finite(u64),
    Infinite,
}

impl Cardinality {
    pub fn finite(self) -> Option<u64> {
        match self {
            Cardinality::Finite(k) => Some(k),
            Cardinality::Infinite => None,
        }
    }

    pub fn is_trivial(self) -> bool {
        self == Cardinality::Finite(1)
    }

    fn times(self, other: Cardinality) -> Cardinality {
        match (self, other) {
            (Cardinality::Finite(a), Cardinality::Finite(b)) => Cardinality::Finite(a * b),
            _ => Cardinality::Infinite,
        }
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(k) => write!(f, "{k}"),
            Cardinality::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Cardinality {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cardinality::Finite(k) => s.serialize_u64(*k),
            Cardinality::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Cardinality {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(0) => Err(serde::de::Error::custom("pi1 cardinality must be >= 1")),
            Raw::Num(k) => Ok(Cardinality::Finite(k)),
            Raw::Str(s) if s == "inf" => Ok(Cardinality::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("expected an integer or \"inf\", got \"{s}\""))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ManifoldKind {
    Sphere { n: u32 },
    Circle,
    RealProjective { n: u32 },
    Grassmann { r: u32, k: u32 },
    OrientedGrassmann { r: u32, k: u32 },
    Stiefel { r: u32, k: u32 },
    Product { factors: Vec<ManifoldDescriptor> },
    Surface { genus: u32, orientable: bool },
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldDescriptor {
    kind: ManifoldKind,
    dim: u32,
    pi1: Option<Cardinality>,
    orientable: Truth,
    closed: Truth,
    compact: Truth,
    euler: Option<i64>,
    fibration_with_section: Truth,
    free_finite_action: Truth,
    punctured_onto: BTreeMap<u32, Truth>,
}

/// User-supplied data for a generic manifold; `None` / `Unknown` means not given.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenericFields {
    pub dim: u32,
    pub pi1: Option<Cardinality>,
    pub orientable: Truth,
    pub closed: Truth,
    pub compact: Truth,
    pub euler: Option<i64>,
    pub fibration_with_section: Truth,
    pub free_finite_action: Truth,
    pub punctured_onto: BTreeMap<u32, Truth>,
}

fn out_of_range(family: &'static str, requirement: &'static str, got: String) -> ManifoldError {
    ManifoldError::OutOfRange { family, requirement, got }
}

/// Radon-Hurwitz number: the maximal number of pointwise independent
/// vector fields on `S^{r-1}` is `rho(r) - 1`.
pub fn radon_hurwitz(r: u32) -> u32 {
    if r == 0 {
        return 0;
    }
    let t = r.trailing_zeros();
    let (c, d) = (t % 4, t / 4);
    (1 << c) + 8 * d
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Euler characteristic of the Grassmannian of `k`-planes in `R^r`.
pub fn euler_char_grassmann(r: u32, k: u32) -> Option<i64> {
    if k == 0 || k >= r {
        return None;
    }
    if r.is_multiple_of(2) && k % 2 == 1 {
        return Some(0);
    }
    Some(binomial(u64::from(r / 2), u64::from(k / 2)) as i64)
}

impl ManifoldDescriptor {
    fn closed_family(kind: ManifoldKind, dim: u32, pi1: Cardinality, orientable: bool, euler: i64) -> Self {
        Self {
            kind,
            dim,
            pi1: Some(pi1),
            orientable: orientable.into(),
            closed: Truth::Yes,
            compact: Truth::Yes,
            euler: Some(euler),
            fibration_with_section: Truth::Unknown,
            free_finite_action: if euler.abs() == 1 { Truth::No } else { Truth::Unknown },
            punctured_onto: BTreeMap::new(),
        }
    }

    pub fn sphere(n: u32) -> Result<Self, ManifoldError> {
        if n < 2 {
            return Err(out_of_range("S^n", "n >= 2", n.to_string()));
        }
        let euler = if n.is_multiple_of(2) { 2 } else { 0 };
        let mut d = Self::closed_family(ManifoldKind::Sphere { n }, n, Cardinality::Finite(1), true, euler);
        d.fibration_with_section = Truth::No;
        d.free_finite_action = Truth::Yes;
        Ok(d)
    }

    /// The circle, only as a product factor.
    pub fn circle() -> Self {
        let mut d = Self::closed_family(ManifoldKind::Circle, 1, Cardinality::Infinite, true, 0);
        d.fibration_with_section = Truth::No;
        d.free_finite_action = Truth::Yes;
        d
    }

    pub fn rp(n: u32) -> Result<Self, ManifoldError> {
        if n < 2 {
            return Err(out_of_range("RP(n)", "n >= 2", n.to_string()));
        }
        let odd = n % 2 == 1;
        let euler = if odd { 0 } else { 1 };
        let mut d = Self::closed_family(ManifoldKind::RealProjective { n }, n, Cardinality::Finite(2), odd, euler);
        d.fibration_with_section = Truth::No;
        d.free_finite_action = Truth::from(odd);
        Ok(d)
    }

    pub fn grassmann(r: u32, k: u32) -> Result<Self, ManifoldError> {
        let euler = euler_char_grassmann(r, k).ok_or_else(|| out_of_range("G(r,k)", "0 < k < r", format!("r={r}, k={k}")))?;
        let dim = k * (r - k);
        if dim < 2 {
            return Err(ManifoldError::DimensionTooSmall(dim));
        }
        Ok(Self::closed_family(ManifoldKind::Grassmann { r, k }, dim, Cardinality::Finite(2), r.is_multiple_of(2), euler))
    }

    pub fn oriented_grassmann(r: u32, k: u32) -> Result<Self, ManifoldError> {
        let euler = euler_char_grassmann(r, k).ok_or_else(|| out_of_range("oriented G(r,k)", "0 < k < r", format!("r={r}, k={k}")))?;
        let dim = k * (r - k);
        if dim < 2 {
            return Err(ManifoldError::DimensionTooSmall(dim));
        }
        let mut d = Self::closed_family(ManifoldKind::OrientedGrassmann { r, k }, dim, Cardinality::Finite(1), true, 2 * euler);
        // reversing the orientation of each plane is a free involution
        d.free_finite_action = Truth::Yes;
        Ok(d)
    }

    pub fn stiefel(r: u32, k: u32) -> Result<Self, ManifoldError> {
        if k == 0 || k >= r {
            return Err(out_of_range("V(r,k)", "0 < k < r", format!("r={r}, k={k}")));
        }
        let dim = k * (2 * r - k - 1) / 2;
        if dim < 2 {
            return Err(ManifoldError::DimensionTooSmall(dim));
        }
        let pi1 = if k + 1 == r { Cardinality::Finite(2) } else { Cardinality::Finite(1) };
        let euler = if k >= 2 {
            0
        } else if (r - 1).is_multiple_of(2) {
            2
        } else {
            0
        };
        let mut d = Self::closed_family(ManifoldKind::Stiefel { r, k }, dim, pi1, true, euler);
        // V(r,k) -> S^{r-1} has a section iff S^{r-1} carries k-1 independent vector fields
        d.fibration_with_section = if k >= 2 && k <= radon_hurwitz(r) { Truth::Yes } else { Truth::Unknown };
        if k == 1 {
            d.fibration_with_section = Truth::No;
        }
        d.free_finite_action = Truth::Yes;
        Ok(d)
    }

    pub fn surface(genus: u32, orientable: bool) -> Result<Self, ManifoldError> {
        if !orientable && genus == 0 {
            return Err(out_of_range("nonorientable surface", "genus >= 1", "0".into()));
        }
        let (euler, pi1) = if orientable {
            (2 - 2 * i64::from(genus), if genus == 0 { Cardinality::Finite(1) } else { Cardinality::Infinite })
        } else {
            (2 - i64::from(genus), if genus == 1 { Cardinality::Finite(2) } else { Cardinality::Infinite })
        };
        let mut d = Self::closed_family(ManifoldKind::Surface { genus, orientable }, 2, pi1, orientable, euler);
        d.fibration_with_section = match (orientable, genus) {
            (_, 0) | (false, 1) => Truth::No,
            (true, 1) | (false, 2) => Truth::Yes,
            _ => Truth::Unknown,
        };
        if orientable {
            d.free_finite_action = Truth::Yes;
        }
        Ok(d)
    }

    pub fn product(factors: Vec<ManifoldDescriptor>) -> Result<Self, ManifoldError> {
        if factors.len() < 2 {
            return Err(ManifoldError::ProductArity);
        }
        let dim = factors.iter().map(|f| f.dim).sum();
        let euler = factors.iter().map(|f| f.euler).try_fold(1i64, |acc, e| e.map(|e| acc * e));
        let pi1 = factors.iter().map(|f| f.pi1).try_fold(Cardinality::Finite(1), |acc, p| p.map(|p| acc.times(p)));
        // an infinite factor decides the product even when another factor is unknown
        let pi1 = pi1.or_else(|| factors.iter().any(|f| f.pi1 == Some(Cardinality::Infinite)).then_some(Cardinality::Infinite));
        let all = |get: fn(&ManifoldDescriptor) -> Truth| factors.iter().map(get).fold(Truth::Yes, Truth::and);
        let any = |get: fn(&ManifoldDescriptor) -> Truth| factors.iter().map(get).fold(Truth::No, Truth::or);
        let free_action = match any(|f| f.free_finite_action) {
            Truth::Yes => Truth::Yes,
            _ if euler.is_some_and(|e| e.abs() == 1) => Truth::No,
            _ => Truth::Unknown,
        };
        Ok(Self {
            dim,
            pi1,
            orientable: all(|f| f.orientable),
            closed: all(|f| f.closed),
            compact: all(|f| f.compact),
            euler,
            fibration_with_section: Truth::Yes,
            free_finite_action: free_action,
            punctured_onto: BTreeMap::new(),
            kind: ManifoldKind::Product { factors },
        })
    }

    pub fn generic(fields: GenericFields) -> Result<Self, ManifoldError> {
        let GenericFields {
            dim,
            pi1,
            orientable,
            mut closed,
            mut compact,
            mut euler,
            fibration_with_section,
            free_finite_action,
            punctured_onto,
        } = fields;
        if dim < 2 {
            return Err(ManifoldError::DimensionTooSmall(dim));
        }
        if orientable.is_no() && pi1 == Some(Cardinality::Finite(1)) {
            return Err(ManifoldError::Inconsistent("a simply connected manifold is orientable".into()));
        }
        match (closed, compact) {
            (a, b) if a.is_known() && b.is_known() && a != b => {
                return Err(ManifoldError::Inconsistent("for manifolds without boundary closed and compact agree".into()))
            }
            (a, Truth::Unknown) => compact = a,
            (Truth::Unknown, b) => closed = b,
            _ => {}
        }
        if let Some(e) = euler.filter(|&e| e != 0) {
            if closed.is_no() {
                return Err(ManifoldError::Inconsistent(format!("Euler characteristic {e} on a noncompact manifold")));
            }
            if dim % 2 == 1 {
                return Err(ManifoldError::Inconsistent(format!("Euler characteristic {e} in odd dimension {dim}")));
            }
            closed = Truth::Yes;
            compact = Truth::Yes;
        }
        if euler.is_none() && closed.is_yes() && dim % 2 == 1 {
            euler = Some(0);
        }
        if free_finite_action.is_yes() && euler.is_some_and(|e| e.abs() == 1) {
            return Err(ManifoldError::Inconsistent("a free finite action needs its order to divide the Euler characteristic".into()));
        }
        Ok(Self {
            kind: ManifoldKind::Generic,
            dim,
            pi1,
            orientable,
            closed,
            compact,
            euler,
            fibration_with_section,
            free_finite_action,
            punctured_onto,
        })
    }

    pub fn kind(&self) -> &ManifoldKind {
        &self.kind
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn pi1(&self) -> Option<Cardinality> {
        self.pi1
    }

    pub fn orientable(&self) -> Truth {
        self.orientable
    }

    pub fn closed(&self) -> Truth {
        self.closed
    }

    pub fn compact(&self) -> Truth {
        self.compact
    }

    pub fn euler(&self) -> Option<i64> {
        self.euler
    }

    pub fn fibration_with_section(&self) -> Truth {
        self.fibration_with_section
    }

    pub fn free_finite_action(&self) -> Truth {
        self.free_finite_action
    }

    pub fn punctured_onto_flags(&self) -> &BTreeMap<u32, Truth> {
        &self.punctured_onto
    }

    pub fn is_sphere(&self) -> bool {
        matches!(self.kind, ManifoldKind::Sphere { .. })
    }

    pub fn is_rp(&self) -> bool {
        matches!(self.kind, ManifoldKind::RealProjective { .. })
    }

    /// S^n or RP(n).
    pub fn is_sphere_or_rp(&self) -> bool {
        self.is_sphere() || self.is_rp()
    }

    /// Whether `pi1` is known to be nontrivial.
    pub fn pi1_nontrivial(&self) -> Truth {
        match self.pi1 {
            Some(c) => Truth::from(!c.is_trivial()),
            None => Truth::Unknown,
        }
    }

    /// The universal cover for S^n / RP(n) targets.
    pub fn sphere_cover(&self) -> Option<ManifoldDescriptor> {
        match self.kind {
            ManifoldKind::RealProjective { n } | ManifoldKind::Sphere { n } => ManifoldDescriptor::sphere(n).ok(),
            _ => None,
        }
    }

    /// Fields no named-family descriptor may leave unknown.
    pub fn derived_fields_known(&self) -> bool {
        self.pi1.is_some() && self.orientable.is_known() && self.closed.is_known() && self.compact.is_known() && self.euler.is_some()
    }
}

impl fmt::Display for ManifoldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ManifoldKind::Sphere { n } => write!(f, "S^{n}"),
            ManifoldKind::Circle => f.write_str("S^1"),
            ManifoldKind::RealProjective { n } => write!(f, "RP({n})"),
            ManifoldKind::Grassmann { r, k } => write!(f, "G({r},{k})"),
            ManifoldKind::OrientedGrassmann { r, k } => write!(f, "G~({r},{k})"),
            ManifoldKind::Stiefel { r, k } => write!(f, "V({r},{k})"),
            ManifoldKind::Product { factors } => {
                let names: Vec<String> = factors.iter().map(ToString::to_string).collect();
                write!(f, "{}", names.join(" x "))
            }
            ManifoldKind::Surface { genus, orientable: true } => write!(f, "surface(genus {genus}, orientable)"),
            ManifoldKind::Surface { genus, orientable: false } => write!(f, "surface(genus {genus}, nonorientable)"),
            ManifoldKind::Generic => write!(f, "generic({}-manifold)", self.dim),
        }
    }
}

/// Whether `w1 : pi1(N) -> Z/2` fails to be injective.
pub fn w1_not_injective(desc: &ManifoldDescriptor) -> Truth {
    match desc.pi1 {
        None => Truth::Unknown,
        Some(Cardinality::Infinite) => Truth::Yes,
        Some(Cardinality::Finite(1)) => Truth::No,
        Some(Cardinality::Finite(2)) => desc.orientable,
        Some(Cardinality::Finite(_)) => Truth::Yes,
    }
}

/// Whether `i_* : pi_m(N - {pt}) -> pi_m(N)` is onto.
pub fn punctured_inclusion_onto(desc: &ManifoldDescriptor, m: u32) -> Truth {
    if m < desc.dim
        || desc.compact.is_no()
        || desc.pi1 == Some(Cardinality::Infinite)
        || desc.fibration_with_section.is_yes()
        || matches!(desc.kind, ManifoldKind::Grassmann { r, k: 2 } if r % 2 == 0 && r > 2)
    {
        return Truth::Yes;
    }
    desc.punctured_onto.get(&m).copied().unwrap_or(Truth::Unknown)
}
