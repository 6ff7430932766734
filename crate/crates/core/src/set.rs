//! Finite-universe set algebra.
//!
//! A [`Universe`] fixes an ordered list of named points. Point `i` owns bit
//! `i` of every [`Subset`] over that universe, so subsets are plain `u16`
//! patterns and the canonical order of subsets is the numeric order of those
//! patterns. A [`SetFamily`] is a duplicate-free, canonically sorted
//! collection of subsets.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::sync::Arc;

use thiserror::Error;

/// Largest universe the engine accepts.
pub const MAX_POINTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("a universe needs at least one point")]
    EmptyUniverse,
    #[error("universe has {size} points, at most {max} are supported")]
    TooLarge { size: usize, max: usize },
    #[error("point names must be non-empty")]
    EmptyName,
    #[error("duplicate point name `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("point index {index} is outside a universe of {size} points")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("bit pattern {bits:#b} has bits beyond a universe of {size} points")]
    BitsOutOfRange { bits: u32, size: usize },
    #[error("operands belong to different universes")]
    UniverseMismatch,
}

/// Identity of a universe: its size plus a fingerprint of the point names.
///
/// Universes built from the same ordered names share an id, so subsets
/// produced by independently parsed copies of one space still combine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniverseId {
    fingerprint: u64,
    size: u8,
}

impl UniverseId {
    pub fn size(self) -> usize {
        self.size as usize
    }

    pub(crate) fn full_mask(self) -> u16 {
        ((1u32 << self.size) - 1) as u16
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    id: UniverseId,
    points: Arc<[String]>,
}

impl Universe {
    pub fn new<I, S>(points: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        if points.is_empty() {
            return Err(SetError::EmptyUniverse);
        }
        if points.len() > MAX_POINTS {
            return Err(SetError::TooLarge {
                size: points.len(),
                max: MAX_POINTS,
            });
        }
        let mut seen = HashSet::new();
        for p in &points {
            if p.is_empty() {
                return Err(SetError::EmptyName);
            }
            if !seen.insert(p.as_str()) {
                return Err(SetError::DuplicatePoint(p.clone()));
            }
        }
        let mut hasher = DefaultHasher::new();
        points.hash(&mut hasher);
        let id = UniverseId {
            fingerprint: hasher.finish(),
            size: points.len() as u8,
        };
        Ok(Universe {
            id,
            points: points.into(),
        })
    }

    /// Universe `{a, b, c, ...}` with `n` single-letter points.
    pub fn letters(n: usize) -> Result<Self, SetError> {
        if n > MAX_POINTS {
            return Err(SetError::TooLarge {
                size: n,
                max: MAX_POINTS,
            });
        }
        Universe::new((0..n).map(|i| char::from(b'a' + i as u8).to_string()))
    }

    pub fn id(&self) -> UniverseId {
        self.id
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point(&self, index: usize) -> Option<&str> {
        self.points.get(index).map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Result<usize, SetError> {
        self.points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| SetError::UnknownPoint(name.to_owned()))
    }

    pub fn empty(&self) -> Subset {
        Subset::raw(0, self.id)
    }

    pub fn full(&self) -> Subset {
        Subset::raw(self.id.full_mask(), self.id)
    }

    pub fn singleton(&self, index: usize) -> Result<Subset, SetError> {
        if index >= self.size() {
            return Err(SetError::IndexOutOfRange {
                index,
                size: self.size(),
            });
        }
        Ok(Subset::raw(1 << index, self.id))
    }

    pub fn subset_from_bits(&self, bits: u32) -> Result<Subset, SetError> {
        if bits & !u32::from(self.id.full_mask()) != 0 {
            return Err(SetError::BitsOutOfRange {
                bits,
                size: self.size(),
            });
        }
        Ok(Subset::raw(bits as u16, self.id))
    }

    pub fn subset<I, S>(&self, names: I) -> Result<Subset, SetError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u16;
        for name in names {
            bits |= 1 << self.index_of(name.as_ref())?;
        }
        Ok(Subset::raw(bits, self.id))
    }

    /// Every subset of the universe, from `∅` up to `X` in canonical order.
    pub fn powerset(&self) -> Powerset {
        Powerset {
            universe: self.id,
            next: 0,
            end: 1u32 << self.size(),
        }
    }

    /// Brace-list rendering in universe order, e.g. `{a,c}`.
    pub fn render(&self, subset: Subset) -> String {
        let names: Vec<&str> = subset.points().filter_map(|i| self.point(i)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn render_family(&self, family: &SetFamily) -> String {
        let members: Vec<String> = family.iter().map(|s| self.render(s)).collect();
        format!("{{{}}}", members.join(", "))
    }

    pub fn names_of(&self, subset: Subset) -> Vec<String> {
        subset
            .points()
            .filter_map(|i| self.point(i).map(str::to_owned))
            .collect()
    }
}

/// Iterator over the powerset of a universe in canonical order.
#[derive(Debug, Clone)]
pub struct Powerset {
    universe: UniverseId,
    next: u32,
    end: u32,
}

impl Iterator for Powerset {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        if self.next >= self.end {
            return None;
        }
        let s = Subset::raw(self.next as u16, self.universe);
        self.next += 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Powerset {}

/// A subset of a [`Universe`].
///
/// The operator traits (`|`, `&`, `-`, `!`) panic when the operands come from
/// different universes; the named methods return [`SetError::UniverseMismatch`]
/// instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: u16,
    universe: UniverseId,
}

impl Subset {
    pub(crate) fn raw(bits: u16, universe: UniverseId) -> Self {
        debug_assert_eq!(bits & !universe.full_mask(), 0);
        Subset { bits, universe }
    }

    pub fn bits(self) -> u16 {
        self.bits
    }

    pub fn universe_id(self) -> UniverseId {
        self.universe
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == self.universe.full_mask()
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn contains(self, point: usize) -> bool {
        point < 16 && self.bits >> point & 1 == 1
    }

    /// Indices of the member points, ascending.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..16).filter(move |i| bits >> i & 1 == 1)
    }

    pub fn complement(self) -> Subset {
        Subset::raw(!self.bits & self.universe.full_mask(), self.universe)
    }

    fn check(self, other: Subset) -> Result<(), SetError> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(SetError::UniverseMismatch)
        }
    }

    pub fn union(self, other: Subset) -> Result<Subset, SetError> {
        self.check(other)?;
        Ok(Subset::raw(self.bits | other.bits, self.universe))
    }

    pub fn intersection(self, other: Subset) -> Result<Subset, SetError> {
        self.check(other)?;
        Ok(Subset::raw(self.bits & other.bits, self.universe))
    }

    pub fn difference(self, other: Subset) -> Result<Subset, SetError> {
        self.check(other)?;
        Ok(Subset::raw(self.bits & !other.bits, self.universe))
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        assert_eq!(
            self.universe, other.universe,
            "subsets from different universes"
        );
        self.bits & !other.bits == 0
    }

    pub fn meets(self, other: Subset) -> bool {
        !(self & other).is_empty()
    }
}

impl BitOr for Subset {
    type Output = Subset;

    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs).expect("subsets from different universes")
    }
}

impl BitAnd for Subset {
    type Output = Subset;

    fn bitand(self, rhs: Subset) -> Subset {
        self.intersection(rhs)
            .expect("subsets from different universes")
    }
}

impl Sub for Subset {
    type Output = Subset;

    fn sub(self, rhs: Subset) -> Subset {
        self.difference(rhs)
            .expect("subsets from different universes")
    }
}

impl Not for Subset {
    type Output = Subset;

    fn not(self) -> Subset {
        self.complement()
    }
}

/// Index-based rendering for contexts without a [`Universe`] at hand.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.points().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}

/// Duplicate-free, canonically ordered family of subsets over one universe.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    universe: UniverseId,
    members: Vec<Subset>,
}

impl SetFamily {
    pub fn new<I>(universe: &Universe, members: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = Subset>,
    {
        let id = universe.id();
        let mut out = Vec::new();
        for m in members {
            if m.universe != id {
                return Err(SetError::UniverseMismatch);
            }
            out.push(m);
        }
        Ok(Self::normalized(id, out))
    }

    pub fn empty(universe: &Universe) -> Self {
        SetFamily {
            universe: universe.id(),
            members: Vec::new(),
        }
    }

    /// The whole powerset `2^X`.
    pub fn powerset(universe: &Universe) -> Self {
        SetFamily {
            universe: universe.id(),
            members: universe.powerset().collect(),
        }
    }

    pub(crate) fn empty_for(universe: UniverseId) -> Self {
        SetFamily {
            universe,
            members: Vec::new(),
        }
    }

    pub(crate) fn from_bits<I>(universe: UniverseId, bits: I) -> Self
    where
        I: IntoIterator<Item = u16>,
    {
        let members = bits.into_iter().map(|b| Subset::raw(b, universe)).collect();
        Self::normalized(universe, members)
    }

    /// Members of the powerset satisfying `keep`, already canonical.
    pub(crate) fn filter_powerset(
        universe: UniverseId,
        mut keep: impl FnMut(Subset) -> bool,
    ) -> Self {
        let members = (0..1u32 << universe.size())
            .map(|b| Subset::raw(b as u16, universe))
            .filter(|s| keep(*s))
            .collect();
        SetFamily { universe, members }
    }

    fn normalized(universe: UniverseId, mut members: Vec<Subset>) -> Self {
        members.sort_unstable();
        members.dedup();
        SetFamily { universe, members }
    }

    pub fn universe_id(&self) -> UniverseId {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn contains(&self, a: Subset) -> Result<bool, SetError> {
        if a.universe != self.universe {
            return Err(SetError::UniverseMismatch);
        }
        Ok(self.has(a))
    }

    /// Membership without the universe check.
    pub(crate) fn has(&self, a: Subset) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// `⋃f`; the empty family gives `∅`.
    pub fn union(&self) -> Subset {
        let bits = self.members.iter().fold(0, |acc, m| acc | m.bits);
        Subset::raw(bits, self.universe)
    }

    /// `⋂f`; the empty family gives `X`.
    pub fn intersection(&self) -> Subset {
        let bits = self
            .members
            .iter()
            .fold(self.universe.full_mask(), |acc, m| acc & m.bits);
        Subset::raw(bits, self.universe)
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.universe == other.universe && self.members.iter().all(|m| other.has(*m))
    }

    /// `{A^c : A ∈ f}`.
    pub fn complements(&self) -> SetFamily {
        Self::normalized(
            self.universe,
            self.members.iter().map(|m| m.complement()).collect(),
        )
    }

    /// Members of `self` missing from `other`, canonical order.
    pub fn difference(&self, other: &SetFamily) -> Vec<Subset> {
        self.members
            .iter()
            .copied()
            .filter(|m| !other.has(*m))
            .collect()
    }

    /// Characteristic pattern over the canonically ordered powerset: bit `k`
    /// is set iff the subset with pattern `k` is a member.
    pub fn characteristic(&self) -> u64 {
        debug_assert!(self.universe.size() <= 6);
        self.members.iter().fold(0, |acc, m| acc | 1u64 << m.bits)
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = Subset;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Subset>>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter().copied()
    }
}
