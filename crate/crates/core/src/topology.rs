//! Topologies on a finite universe.
//!
//! A [`Topology`] is only built through [`Topology::validate`], which checks
//! the open-set axioms and then derives the closed, regular-open,
//! regular-closed and δ-open families once. Interior and closure run through
//! the minimal open neighbourhood of each point, which exists in every finite
//! space.

use thiserror::Error;

use crate::set::{SetError, SetFamily, Subset, Universe};

/// Largest universe for which [`enumerate_topologies`] is supported.
pub const MAX_ENUMERATION_POINTS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("the empty set is not open")]
    MissingEmpty,
    #[error("the universe is not open")]
    MissingUniverse,
    #[error("not closed under union: {a} ∪ {b} is missing")]
    NotClosedUnderUnion { a: String, b: String },
    #[error("not closed under intersection: {a} ∩ {b} is missing")]
    NotClosedUnderIntersection { a: String, b: String },
    #[error(transparent)]
    Set(#[from] SetError),
}

impl TopologyError {
    /// Short machine-readable name of the violated axiom.
    pub fn axiom(&self) -> &'static str {
        match self {
            TopologyError::MissingEmpty => "missing-empty",
            TopologyError::MissingUniverse => "missing-universe",
            TopologyError::NotClosedUnderUnion { .. } => "not-closed-under-union",
            TopologyError::NotClosedUnderIntersection { .. } => "not-closed-under-intersection",
            TopologyError::Set(_) => "set",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    universe: Universe,
    opens: SetFamily,
    closed: SetFamily,
    regular_open: SetFamily,
    regular_closed: SetFamily,
    delta_open: SetFamily,
    /// Minimal open neighbourhood of each point.
    kernels: Vec<Subset>,
}

impl Topology {
    pub fn validate(family: &SetFamily, universe: &Universe) -> Result<Self, TopologyError> {
        if family.universe_id() != universe.id() {
            return Err(SetError::UniverseMismatch.into());
        }
        if !family.has(universe.empty()) {
            return Err(TopologyError::MissingEmpty);
        }
        if !family.has(universe.full()) {
            return Err(TopologyError::MissingUniverse);
        }
        for (i, a) in family.iter().enumerate() {
            for b in family.members()[i + 1..].iter().copied() {
                if !family.has(a | b) {
                    return Err(TopologyError::NotClosedUnderUnion {
                        a: universe.render(a),
                        b: universe.render(b),
                    });
                }
            }
        }
        for (i, a) in family.iter().enumerate() {
            for b in family.members()[i + 1..].iter().copied() {
                if !family.has(a & b) {
                    return Err(TopologyError::NotClosedUnderIntersection {
                        a: universe.render(a),
                        b: universe.render(b),
                    });
                }
            }
        }
        Ok(Self::build(universe.clone(), family.clone()))
    }

    fn build(universe: Universe, opens: SetFamily) -> Self {
        let kernels = (0..universe.size())
            .map(|x| {
                opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(universe.full(), |acc, u| acc & u)
            })
            .collect();
        let id = universe.id();
        let mut t = Topology {
            closed: opens.complements(),
            universe,
            opens,
            regular_open: SetFamily::empty_for(id),
            regular_closed: SetFamily::empty_for(id),
            delta_open: SetFamily::empty_for(id),
            kernels,
        };
        t.regular_open = SetFamily::filter_powerset(id, |a| t.int(t.cl(a)) == a);
        t.regular_closed = t.regular_open.complements();
        t.delta_open = SetFamily::filter_powerset(id, |a| t.delta_int(a) == a);
        t
    }

    pub fn discrete(universe: &Universe) -> Self {
        Self::build(universe.clone(), SetFamily::powerset(universe))
    }

    pub fn indiscrete(universe: &Universe) -> Self {
        let opens = SetFamily::new(universe, [universe.empty(), universe.full()])
            .expect("subsets come from the same universe");
        Self::build(universe.clone(), opens)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn closed_sets(&self) -> &SetFamily {
        &self.closed
    }

    /// `RO(X)`.
    pub fn regular_open_family(&self) -> &SetFamily {
        &self.regular_open
    }

    /// `RC(X)`.
    pub fn regular_closed_family(&self) -> &SetFamily {
        &self.regular_closed
    }

    /// `τ_δ`.
    pub fn delta_open_family(&self) -> &SetFamily {
        &self.delta_open
    }

    /// Smallest open set containing point `x`.
    pub fn minimal_neighborhood(&self, x: usize) -> Option<Subset> {
        self.kernels.get(x).copied()
    }

    fn check(&self, a: Subset) -> Result<(), SetError> {
        if a.universe_id() == self.universe.id() {
            Ok(())
        } else {
            Err(SetError::UniverseMismatch)
        }
    }

    pub(crate) fn int(&self, a: Subset) -> Subset {
        self.points_where(|x| self.kernels[x].is_subset_of(a))
    }

    pub(crate) fn cl(&self, a: Subset) -> Subset {
        self.points_where(|x| self.kernels[x].meets(a))
    }

    pub(crate) fn delta_int(&self, a: Subset) -> Subset {
        self.regular_open
            .iter()
            .filter(|u| u.is_subset_of(a))
            .fold(self.universe.empty(), |acc, u| acc | u)
    }

    pub(crate) fn delta_cl(&self, a: Subset) -> Subset {
        self.points_where(|x| {
            self.regular_open
                .iter()
                .filter(|u| u.contains(x))
                .all(|u| u.meets(a))
        })
    }

    pub(crate) fn points_where(&self, mut pred: impl FnMut(usize) -> bool) -> Subset {
        (0..self.universe.size())
            .filter(|&x| pred(x))
            .fold(self.universe.empty(), |acc, x| {
                acc | self.universe.singleton(x).expect("index in range")
            })
    }

    pub fn interior(&self, a: Subset) -> Result<Subset, SetError> {
        self.check(a)?;
        Ok(self.int(a))
    }

    pub fn closure(&self, a: Subset) -> Result<Subset, SetError> {
        self.check(a)?;
        Ok(self.cl(a))
    }

    /// `O(X,x)`: open sets containing the named point.
    pub fn open_neighborhoods(&self, point: &str) -> Result<SetFamily, SetError> {
        let x = self.universe.index_of(point)?;
        Ok(neighborhoods(&self.opens, x))
    }

    /// `RO(X,x)`: regular open sets containing the named point.
    pub fn regular_open_neighborhoods(&self, point: &str) -> Result<SetFamily, SetError> {
        let x = self.universe.index_of(point)?;
        Ok(neighborhoods(&self.regular_open, x))
    }

    pub fn is_open(&self, a: Subset) -> Result<bool, SetError> {
        self.opens.contains(a)
    }

    pub fn is_regular_open(&self, a: Subset) -> Result<bool, SetError> {
        self.check(a)?;
        Ok(self.int(self.cl(a)) == a)
    }

    pub fn delta_interior(&self, a: Subset) -> Result<Subset, SetError> {
        self.check(a)?;
        Ok(self.delta_int(a))
    }

    pub fn delta_closure(&self, a: Subset) -> Result<Subset, SetError> {
        self.check(a)?;
        Ok(self.delta_cl(a))
    }

    pub fn is_delta_open(&self, a: Subset) -> Result<bool, SetError> {
        self.delta_open.contains(a)
    }

    pub fn is_delta_closed(&self, a: Subset) -> Result<bool, SetError> {
        self.check(a)?;
        Ok(self.delta_open.has(a.complement()))
    }

    /// Points and closed sets can be separated by disjoint opens. No T1
    /// assumption is made.
    pub fn is_regular_space(&self) -> bool {
        (0..self.universe.size()).all(|x| {
            self.closed.iter().filter(|c| !c.contains(x)).all(|c| {
                self.opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .any(|u| self.opens.iter().any(|v| c.is_subset_of(v) && !u.meets(v)))
            })
        })
    }

    /// Every singleton is closed.
    pub fn is_t1(&self) -> bool {
        (0..self.universe.size()).all(|x| {
            let s = self.universe.singleton(x).expect("index in range");
            self.closed.has(s)
        })
    }

    pub fn is_hausdorff(&self) -> bool {
        let n = self.universe.size();
        (0..n).all(|x| {
            (x + 1..n).all(|y| {
                self.opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .any(|u| self.opens.iter().any(|v| v.contains(y) && !u.meets(v)))
            })
        })
    }

    pub fn is_discrete(&self) -> bool {
        self.opens.len() == 1 << self.universe.size()
    }
}

fn neighborhoods(family: &SetFamily, x: usize) -> SetFamily {
    SetFamily::from_bits(
        family.universe_id(),
        family.iter().filter(|u| u.contains(x)).map(Subset::bits),
    )
}

/// Every topology on `universe`, ordered by the characteristic pattern of the
/// open-set family.
pub fn enumerate_topologies(universe: &Universe) -> Result<Vec<Topology>, SetError> {
    let n = universe.size();
    if n > MAX_ENUMERATION_POINTS {
        return Err(SetError::TooLarge {
            size: n,
            max: MAX_ENUMERATION_POINTS,
        });
    }
    let full = universe.full().bits();
    // proper non-empty subsets, ascending
    let middle: Vec<u16> = (1..full).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << middle.len() {
        let mut present = vec![false; 1 << n];
        present[0] = true;
        present[full as usize] = true;
        let mut members = vec![0u16, full];
        for (i, &m) in middle.iter().enumerate() {
            if mask >> i & 1 == 1 {
                present[m as usize] = true;
                members.push(m);
            }
        }
        let closed = members.iter().all(|&a| {
            members
                .iter()
                .all(|&b| present[(a | b) as usize] && present[(a & b) as usize])
        });
        if closed {
            let family = SetFamily::from_bits(universe.id(), members);
            out.push(Topology::build(universe.clone(), family));
        }
    }
    Ok(out)
}
