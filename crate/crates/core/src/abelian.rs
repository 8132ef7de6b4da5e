//! Finitely generated abelian groups in invariant-factor form.
//!
//! A group is `Z^r + Z/d1 + ... + Z/dt` with `2 <= d1 | d2 | ... | dt`.
//! Elements are integer coordinate vectors over the standard generators,
//! free coordinates first, torsion coordinates always reduced into
//! `[0, di)`. Homomorphisms are integer matrices on those generators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::truth::Truth;

/// Largest finite source a homomorphism check will look at before giving up.
const MAX_FINITE_ORDER: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("torsion coefficient {0} is not >= 2")]
    TorsionTooSmall(i64),
    #[error("torsion coefficients {0} and {1} break the divisibility chain (normal form is {2})")]
    NotInvariantForm(u64, u64, String),
    #[error("element has {got} coordinates but the group {group} needs {expected}")]
    CoordinateLength { group: String, expected: usize, got: usize },
    #[error("cannot parse group literal `{literal}`: {reason}")]
    Literal { literal: String, reason: String },
    #[error("element of {got} passed where {expected} was expected")]
    ShapeMismatch { expected: String, got: String },
    #[error("matrix is {rows}x{cols} but the map {source_group} -> {target_group} needs {want_rows}x{want_cols}")]
    MatrixShape {
        source_group: String,
        target_group: String,
        rows: usize,
        cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("generator {generator} has order {order} but its image does not")]
    IllDefined { generator: usize, order: u64 },
}

/// Order of a group or of an element.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupOrder {
    Finite(u64),
    Infinite,
}

impl GroupOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            GroupOrder::Finite(n) => Some(n),
            GroupOrder::Infinite => None,
        }
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => f.write_str("inf"),
        }
    }
}

/// `Z^rank + Z/torsion[0] + ...` in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgAbelianGroup {
    rank: usize,
    torsion: Vec<u64>,
}

impl FgAbelianGroup {
    /// Builds a group whose torsion list must already be in invariant-factor form.
    pub fn new(rank: usize, torsion: Vec<u64>) -> Result<Self, AbelianError> {
        for &d in &torsion {
            if d < 2 {
                return Err(AbelianError::TorsionTooSmall(d as i64));
            }
        }
        for w in torsion.windows(2) {
            if w[1] % w[0] != 0 {
                let normal = Self::from_cyclic_factors(rank, &torsion);
                return Err(AbelianError::NotInvariantForm(w[0], w[1], normal.to_string()));
            }
        }
        Ok(Self { rank, torsion })
    }

    /// Normalizes an arbitrary direct sum of cyclic groups. A factor of 0 is a
    /// copy of `Z`, factors of 1 vanish.
    pub fn from_cyclic_factors(rank: usize, factors: &[u64]) -> Self {
        let mut rank = rank;
        let mut by_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for &d in factors {
            if d == 0 {
                rank += 1;
                continue;
            }
            for (p, e) in prime_powers(d) {
                match by_prime.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, exps)) => exps.push(e),
                    None => by_prime.push((p, vec![e])),
                }
            }
        }
        let len = by_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut torsion = vec![1u64; len];
        for (p, mut exps) in by_prime {
            exps.sort_unstable();
            // largest powers go to the last invariant factors
            let offset = len - exps.len();
            for (i, e) in exps.into_iter().enumerate() {
                torsion[offset + i] *= p.pow(e);
            }
        }
        Self { rank, torsion }
    }

    /// Re-normalizes the group; a fixed point for groups built by `new`.
    pub fn normalized(&self) -> Self {
        Self::from_cyclic_factors(self.rank, &self.torsion)
    }

    pub fn trivial() -> Self {
        Self { rank: 0, torsion: Vec::new() }
    }

    pub fn integers() -> Self {
        Self { rank: 1, torsion: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_factors(0, &[n])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Number of standard generators.
    pub fn ngens(&self) -> usize {
        self.rank + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn order(&self) -> GroupOrder {
        if self.rank > 0 {
            GroupOrder::Infinite
        } else {
            GroupOrder::Finite(self.torsion.iter().product())
        }
    }

    /// Exponent of the torsion subgroup (1 when torsion free).
    pub fn torsion_exponent(&self) -> u64 {
        self.torsion.last().copied().unwrap_or(1)
    }

    /// True when some element has order strictly greater than `bound`
    /// (infinite order counts).
    pub fn has_element_of_order_above(&self, bound: u64) -> bool {
        self.rank > 0 || self.torsion_exponent() > bound
    }

    /// Order of the generator at `index` (0 for free generators).
    fn generator_modulus(&self, index: usize) -> u64 {
        if index < self.rank {
            0
        } else {
            self.torsion[index - self.rank]
        }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { group: self.clone(), coords: vec![0; self.ngens()] }
    }

    pub fn element(&self, coords: Vec<i64>) -> Result<GroupElement, AbelianError> {
        GroupElement::new(self.clone(), coords)
    }

    pub fn generator(&self, index: usize) -> Option<GroupElement> {
        if index >= self.ngens() {
            return None;
        }
        let mut coords = vec![0; self.ngens()];
        coords[index] = 1;
        Some(GroupElement { group: self.clone(), coords })
    }

    fn reduce_in_place(&self, coords: &mut [i64]) {
        for (i, c) in coords.iter_mut().enumerate().skip(self.rank) {
            let d = self.generator_modulus(i) as i64;
            *c = c.rem_euclid(d);
        }
    }

    /// True when `multiplier * x = 0` for every element `x`.
    pub fn annihilated_by(&self, multiplier: i64) -> bool {
        if multiplier == 0 {
            return true;
        }
        if self.rank > 0 {
            return false;
        }
        let m = multiplier.unsigned_abs();
        self.torsion.iter().all(|d| m.is_multiple_of(*d))
    }

    /// True when multiplication by `multiplier` is injective (so `multiplier * x = 0`
    /// forces `x = 0`).
    pub fn multiplication_is_injective(&self, multiplier: i64) -> bool {
        if multiplier == 0 {
            return self.is_trivial();
        }
        let m = multiplier.unsigned_abs();
        self.torsion.iter().all(|&d| gcd(m, d) == 1)
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" + "))
    }
}

impl FromStr for FgAbelianGroup {
    type Err = AbelianError;

    /// Grammar: `0` | term (`+` term)*, term = `Z` | `Z^r` | `Z/d`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| AbelianError::Literal { literal: s.to_string(), reason: reason.to_string() };
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(err("empty literal"));
        }
        if trimmed == "0" {
            return Ok(Self::trivial());
        }
        let mut rank = 0usize;
        let mut torsion = Vec::new();
        let mut seen_torsion = false;
        for term in trimmed.split('+').map(str::trim) {
            if term == "Z" {
                if seen_torsion {
                    return Err(err("free summands must come before torsion summands"));
                }
                rank += 1;
            } else if let Some(exp) = term.strip_prefix("Z^") {
                if seen_torsion {
                    return Err(err("free summands must come before torsion summands"));
                }
                let r: usize = exp.trim().parse().map_err(|_| err("bad free rank"))?;
                rank += r;
            } else if let Some(d) = term.strip_prefix("Z/") {
                let d: i64 = d.trim().parse().map_err(|_| err("bad torsion coefficient"))?;
                if d < 2 {
                    return Err(AbelianError::TorsionTooSmall(d));
                }
                seen_torsion = true;
                torsion.push(d as u64);
            } else {
                return Err(err(&format!("unrecognized summand `{term}`")));
            }
        }
        Self::new(rank, torsion)
    }
}

impl Serialize for FgAbelianGroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FgAbelianGroup {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    group: FgAbelianGroup,
    coords: Vec<i64>,
}

impl GroupElement {
    pub fn new(group: FgAbelianGroup, mut coords: Vec<i64>) -> Result<Self, AbelianError> {
        if coords.len() != group.ngens() {
            return Err(AbelianError::CoordinateLength {
                group: group.to_string(),
                expected: group.ngens(),
                got: coords.len(),
            });
        }
        group.reduce_in_place(&mut coords);
        Ok(Self { group, coords })
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn order(&self) -> GroupOrder {
        order_of_element(self)
    }

    fn check_same_group(&self, other: &GroupElement) -> Result<(), AbelianError> {
        if self.group != other.group {
            return Err(AbelianError::ShapeMismatch {
                expected: self.group.to_string(),
                got: other.group.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement, AbelianError> {
        self.check_same_group(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        GroupElement::new(self.group.clone(), coords)
    }

    pub fn sub(&self, other: &GroupElement) -> Result<GroupElement, AbelianError> {
        self.check_same_group(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        GroupElement::new(self.group.clone(), coords)
    }

    pub fn neg(&self) -> GroupElement {
        let coords = self.coords.iter().map(|c| -c).collect();
        GroupElement::new(self.group.clone(), coords).expect("same shape")
    }

    pub fn scale(&self, k: i64) -> GroupElement {
        let coords = self.coords.iter().map(|c| c * k).collect();
        GroupElement::new(self.group.clone(), coords).expect("same shape")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coords.iter().map(i64::to_string).collect();
        write!(f, "({}) in {}", body.join(","), self.group)
    }
}

/// Least `n >= 1` with `n * e = 0`, or infinite when a free coordinate is nonzero.
pub fn order_of_element(e: &GroupElement) -> GroupOrder {
    let rank = e.group.rank;
    if e.coords[..rank].iter().any(|&c| c != 0) {
        return GroupOrder::Infinite;
    }
    let order = e.coords[rank..]
        .iter()
        .zip(&e.group.torsion)
        .map(|(&c, &d)| d / gcd(c.unsigned_abs(), d))
        .fold(1, lcm);
    GroupOrder::Finite(order)
}

/// A homomorphism given by its matrix on the standard generators. Column `j`
/// is the image of source generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FgAbelianGroup,
    target: FgAbelianGroup,
    columns: Vec<Vec<i64>>,
}

impl GroupHom {
    /// `matrix` is row-major with one row per target generator.
    pub fn new(source: FgAbelianGroup, target: FgAbelianGroup, matrix: Vec<Vec<i64>>) -> Result<Self, AbelianError> {
        let shape_err = |rows: usize, cols: usize| AbelianError::MatrixShape {
            source_group: source.to_string(),
            target_group: target.to_string(),
            rows,
            cols,
            want_rows: target.ngens(),
            want_cols: source.ngens(),
        };
        let cols = matrix.first().map_or(source.ngens(), Vec::len);
        if matrix.len() != target.ngens() || matrix.iter().any(|r| r.len() != source.ngens()) {
            return Err(shape_err(matrix.len(), cols));
        }
        let columns = (0..source.ngens())
            .map(|j| {
                let mut col: Vec<i64> = matrix.iter().map(|row| row[j]).collect();
                target.reduce_in_place(&mut col);
                col
            })
            .collect();
        let hom = Self { source, target, columns };
        hom.check_well_defined()?;
        Ok(hom)
    }

    fn from_columns(source: FgAbelianGroup, target: FgAbelianGroup, columns: Vec<Vec<i64>>) -> Result<Self, AbelianError> {
        let hom = Self { source, target, columns };
        hom.check_well_defined()?;
        Ok(hom)
    }

    fn check_well_defined(&self) -> Result<(), AbelianError> {
        for j in self.source.rank..self.source.ngens() {
            let d = self.source.generator_modulus(j);
            let mut image: Vec<i64> = self.columns[j].iter().map(|c| c * d as i64).collect();
            self.target.reduce_in_place(&mut image);
            if image.iter().any(|&c| c != 0) {
                return Err(AbelianError::IllDefined { generator: j, order: d });
            }
        }
        Ok(())
    }

    pub fn zero(source: FgAbelianGroup, target: FgAbelianGroup) -> Self {
        let columns = vec![vec![0; target.ngens()]; source.ngens()];
        Self { source, target, columns }
    }

    pub fn identity(group: FgAbelianGroup) -> Self {
        let n = group.ngens();
        let columns = (0..n).map(|j| (0..n).map(|i| i64::from(i == j)).collect()).collect();
        Self { source: group.clone(), target: group, columns }
    }

    pub fn source(&self) -> &FgAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    /// Row-major matrix (one row per target generator).
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (0..self.target.ngens()).map(|i| self.columns.iter().map(|c| c[i]).collect()).collect()
    }

    pub fn is_zero_map(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|&x| x == 0))
    }

    pub fn apply(&self, e: &GroupElement) -> Result<GroupElement, AbelianError> {
        apply_hom(self, e)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom, AbelianError> {
        if inner.target != self.source {
            return Err(AbelianError::ShapeMismatch {
                expected: self.source.to_string(),
                got: inner.target.to_string(),
            });
        }
        let columns = inner
            .columns
            .iter()
            .map(|col| {
                let e = GroupElement { group: self.source.clone(), coords: col.clone() };
                apply_hom(self, &e).map(|img| img.coords)
            })
            .collect::<Result<Vec<_>, _>>()?;
        GroupHom::from_columns(inner.source.clone(), self.target.clone(), columns)
    }

    /// Whether the free-to-free block is diagonal.
    pub fn is_diagonal_on_free(&self) -> bool {
        (0..self.source.rank).all(|j| (0..self.target.rank).all(|i| i == j || self.columns[j][i] == 0))
    }

    pub fn is_injective(&self) -> Truth {
        is_injective(self)
    }
}

/// Matrix action followed by reduction in the target.
pub fn apply_hom(h: &GroupHom, e: &GroupElement) -> Result<GroupElement, AbelianError> {
    if e.group != h.source {
        return Err(AbelianError::ShapeMismatch { expected: h.source.to_string(), got: e.group.to_string() });
    }
    let mut out = vec![0i64; h.target.ngens()];
    for (col, &c) in h.columns.iter().zip(&e.coords) {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(col) {
            *o += x * c;
        }
    }
    GroupElement::new(h.target.clone(), out)
}

/// Kernel triviality.
///
/// Free generators must map diagonally onto free generators with nonzero
/// weight; any free generator with no free image has a nonzero multiple in
/// the kernel. The torsion subgroup is checked one prime at a time on its
/// `p`-socle, which any nontrivial finite kernel must meet. A non-diagonal
/// free block is reported as `Unknown`.
pub fn is_injective(h: &GroupHom) -> Truth {
    let (src, tgt) = (&h.source, &h.target);
    if !h.is_diagonal_on_free() {
        return Truth::Unknown;
    }
    for j in 0..src.rank {
        let weight = if j < tgt.rank { h.columns[j][j] } else { 0 };
        if weight == 0 {
            return Truth::No;
        }
    }
    if src.torsion.iter().product::<u64>() > MAX_FINITE_ORDER {
        return Truth::Unknown;
    }
    let mut primes: Vec<u64> = src.torsion.iter().flat_map(|&d| prime_powers(d).into_iter().map(|(p, _)| p)).collect();
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        // socle basis vectors (d/p) * e_i and their images in the target p-socle
        let socle: Vec<usize> = (0..src.torsion.len()).filter(|&i| src.torsion[i] % p == 0).collect();
        let target_rows: Vec<usize> = (0..tgt.torsion.len()).filter(|&j| tgt.torsion[j] % p == 0).collect();
        let mut rows: Vec<Vec<u64>> = vec![vec![0; socle.len()]; target_rows.len()];
        for (col_idx, &i) in socle.iter().enumerate() {
            let scale = (src.torsion[i] / p) as i64;
            let column = &h.columns[src.rank + i];
            for (row_idx, &j) in target_rows.iter().enumerate() {
                let d = tgt.torsion[j] as i64;
                let v = (column[tgt.rank + j] * scale).rem_euclid(d);
                let step = d / p as i64;
                rows[row_idx][col_idx] = ((v / step) as u64) % p;
            }
        }
        if rank_mod_p(rows, socle.len(), p) < socle.len() {
            return Truth::No;
        }
    }
    Truth::Yes
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][col], p);
        for c in 0..ncols {
            rows[rank][c] = rows[rank][c] * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..ncols {
                    rows[r][c] = (rows[r][c] + p * p - factor * rows[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime and small
    let (mut t, mut new_t, mut r, mut new_r) = (0i64, 1i64, p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u64
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

fn prime_powers(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> FgAbelianGroup {
        s.parse().unwrap()
    }

    #[test]
    fn literal_round_trip() {
        for lit in ["0", "Z", "Z^2", "Z/2", "Z + Z/12", "Z/3 + Z/24", "Z/2 + Z/2 + Z/2 + Z/2"] {
            assert_eq!(g(lit).to_string(), lit);
        }
        assert_eq!(g(" Z  +Z/12 ").to_string(), "Z + Z/12");
    }

    #[test]
    fn literal_rejects_non_invariant_form() {
        let err = "Z/2 + Z/3".parse::<FgAbelianGroup>().unwrap_err();
        assert!(matches!(err, AbelianError::NotInvariantForm(2, 3, ref n) if n == "Z/6"));
        assert!("Z/1".parse::<FgAbelianGroup>().is_err());
        assert!("Q".parse::<FgAbelianGroup>().is_err());
        assert!("Z/2 + Z".parse::<FgAbelianGroup>().is_err());
    }

    #[test]
    fn normalization() {
        assert_eq!(FgAbelianGroup::from_cyclic_factors(0, &[24, 3]), g("Z/3 + Z/24"));
        assert_eq!(FgAbelianGroup::from_cyclic_factors(0, &[4, 6]), g("Z/2 + Z/12"));
        assert_eq!(FgAbelianGroup::from_cyclic_factors(1, &[1, 0]), g("Z^2"));
        assert_eq!(FgAbelianGroup::from_cyclic_factors(0, &[]), FgAbelianGroup::trivial());
    }

    #[test]
    fn orders() {
        assert_eq!(g("0").order(), GroupOrder::Finite(1));
        assert_eq!(g("Z/2 + Z/2").order(), GroupOrder::Finite(4));
        assert_eq!(g("Z + Z/12").order(), GroupOrder::Infinite);
    }

    #[test]
    fn element_orders() {
        let z24 = g("Z/24");
        assert_eq!(z24.zero().order(), GroupOrder::Finite(1));
        assert_eq!(z24.generator(0).unwrap().order(), GroupOrder::Finite(24));
        assert_eq!(z24.element(vec![18]).unwrap().order(), GroupOrder::Finite(4));
        let mixed = g("Z + Z/12");
        assert_eq!(mixed.element(vec![1, 0]).unwrap().order(), GroupOrder::Infinite);
        assert_eq!(mixed.element(vec![0, 8]).unwrap().order(), GroupOrder::Finite(3));
    }

    #[test]
    fn malformed_element_is_structural_error() {
        let err = g("Z + Z/12").element(vec![1]).unwrap_err();
        assert!(matches!(err, AbelianError::CoordinateLength { expected: 2, got: 1, .. }));
    }

    #[test]
    fn torsion_coordinates_are_reduced() {
        let e = g("Z + Z/12").element(vec![-3, -1]).unwrap();
        assert_eq!(e.coords(), &[-3, 11]);
    }

    #[test]
    fn apply_examples() {
        let z2 = g("Z/2");
        let zero = GroupHom::zero(z2.clone(), g("Z/4"));
        assert!(zero.apply(&z2.generator(0).unwrap()).unwrap().is_zero());
        let id = GroupHom::identity(z2.clone());
        assert_eq!(id.apply(&z2.generator(0).unwrap()).unwrap(), z2.generator(0).unwrap());
        let reduce = GroupHom::new(g("Z"), g("Z/24"), vec![vec![1]]).unwrap();
        let image = reduce.apply(&g("Z").element(vec![25]).unwrap()).unwrap();
        assert_eq!(image.coords(), &[1]);
    }

    #[test]
    fn apply_shape_mismatch() {
        let h = GroupHom::identity(g("Z/2"));
        assert!(matches!(h.apply(&g("Z/4").zero()), Err(AbelianError::ShapeMismatch { .. })));
    }

    #[test]
    fn ill_defined_hom_rejected() {
        // Z/2 -> Z/4 sending the generator to a generator is not a homomorphism
        assert!(matches!(
            GroupHom::new(g("Z/2"), g("Z/4"), vec![vec![1]]),
            Err(AbelianError::IllDefined { generator: 0, order: 2 })
        ));
        assert!(GroupHom::new(g("Z/2"), g("Z"), vec![vec![1]]).is_err());
        assert!(GroupHom::new(g("Z/2"), g("Z/4"), vec![vec![1, 2]]).is_err());
    }

    #[test]
    fn injectivity_examples() {
        let e = GroupHom::new(g("Z/2"), g("Z/4"), vec![vec![2]]).unwrap();
        assert_eq!(e.is_injective(), Truth::Yes);
        assert_eq!(GroupHom::zero(g("Z/2"), g("Z/2")).is_injective(), Truth::No);
        // stable suspension Z + Z/12 -> Z/24, free generator to a generator,
        // torsion generator to twice it; kernel is spanned by (2, -1)
        let e_inf = GroupHom::new(g("Z + Z/12"), g("Z/24"), vec![vec![1, 2]]).unwrap();
        assert_eq!(e_inf.is_injective(), Truth::No);
        let kernel_elt = g("Z + Z/12").element(vec![2, -1]).unwrap();
        assert!(e_inf.apply(&kernel_elt).unwrap().is_zero());
        // suspension of Z/12 onto the torsion summand is injective
        let e = GroupHom::new(g("Z/12"), g("Z + Z/12"), vec![vec![0], vec![1]]).unwrap();
        assert_eq!(e.is_injective(), Truth::Yes);
    }

    #[test]
    fn injectivity_infinite_cases() {
        let doubling = GroupHom::new(g("Z"), g("Z"), vec![vec![2]]).unwrap();
        assert_eq!(doubling.is_injective(), Truth::Yes);
        let swap = GroupHom::new(g("Z^2"), g("Z^2"), vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(swap.is_injective(), Truth::Unknown);
        let into_torsion = GroupHom::new(g("Z"), g("Z/5"), vec![vec![1]]).unwrap();
        assert_eq!(into_torsion.is_injective(), Truth::No);
    }

    #[test]
    fn multiplication_checks() {
        assert!(g("Z/3").multiplication_is_injective(2));
        assert!(!g("Z/24").multiplication_is_injective(2));
        assert!(g("Z").multiplication_is_injective(-2));
        assert!(g("Z/2 + Z/2").annihilated_by(2));
        assert!(!g("Z/24").annihilated_by(2));
        assert!(g("0").annihilated_by(0));
        assert!(g("Z + Z/3").annihilated_by(0));
    }

    #[test]
    fn compose_is_matrix_product() {
        let a = GroupHom::new(g("Z"), g("Z"), vec![vec![3]]).unwrap();
        let b = GroupHom::new(g("Z"), g("Z/24"), vec![vec![5]]).unwrap();
        let c = b.compose(&a).unwrap();
        assert_eq!(c.matrix(), vec![vec![15]]);
        assert!(a.compose(&b).is_err());
    }
}
