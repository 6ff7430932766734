//! Primals and primal topological spaces.
//!
//! A primal on `X` is a family `𝒫 ⊆ 2^X` that omits `X`, is closed
//! downward, and satisfies `A∩B ∈ 𝒫 ⇒ A ∈ 𝒫 or B ∈ 𝒫`. On a finite set the
//! non-members of a primal always form a principal filter, so a universe of
//! `n` points carries exactly `2^n` primals.

use thiserror::Error;

use crate::set::{SetError, SetFamily, Subset, Universe};
use crate::topology::{Topology, MAX_ENUMERATION_POINTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimalError {
    #[error("the universe itself belongs to the family")]
    ContainsUniverse,
    #[error("not downward closed: {superset} is a member but its subset {subset} is not")]
    NotDownwardClosed { superset: String, subset: String },
    #[error(
        "intersection condition fails: {a} ∩ {b} = {meet} is a member but neither {a} nor {b} is"
    )]
    IntersectionViolation { a: String, b: String, meet: String },
    #[error(transparent)]
    Set(#[from] SetError),
}

impl PrimalError {
    pub fn condition(&self) -> &'static str {
        match self {
            PrimalError::ContainsUniverse => "contains-universe",
            PrimalError::NotDownwardClosed { .. } => "not-downward-closed",
            PrimalError::IntersectionViolation { .. } => "intersection-violation",
            PrimalError::Set(_) => "set",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Primal {
    universe: Universe,
    members: SetFamily,
}

impl Primal {
    pub fn validate(family: &SetFamily, universe: &Universe) -> Result<Self, PrimalError> {
        if family.universe_id() != universe.id() {
            return Err(SetError::UniverseMismatch.into());
        }
        if family.has(universe.full()) {
            return Err(PrimalError::ContainsUniverse);
        }
        for a in family {
            let bits = a.bits();
            // proper subsets of `a`, ascending
            let missing = (0..bits)
                .filter(|b| b & !bits == 0)
                .map(|b| Subset::raw(b, a.universe_id()))
                .find(|b| !family.has(*b));
            if let Some(b) = missing {
                return Err(PrimalError::NotDownwardClosed {
                    superset: universe.render(a),
                    subset: universe.render(b),
                });
            }
        }
        // With downward closure in place the non-members form an upward closed
        // family; the intersection condition says it is also closed under
        // pairwise meets, which a running meet detects in one pass.
        let outside: Vec<Subset> = universe.powerset().filter(|s| !family.has(*s)).collect();
        if let Some((&first, rest)) = outside.split_first() {
            let mut meet = first;
            for &b in rest {
                let next = meet & b;
                if family.has(next) {
                    return Err(PrimalError::IntersectionViolation {
                        a: universe.render(meet),
                        b: universe.render(b),
                        meet: universe.render(next),
                    });
                }
                meet = next;
            }
        }
        Ok(Primal {
            universe: universe.clone(),
            members: family.clone(),
        })
    }

    /// The complement-form characterization: `X ∉ 𝒫`; `B ∉ 𝒫, B ⊆ A ⇒ A ∉ 𝒫`;
    /// `A ∉ 𝒫, B ∉ 𝒫 ⇒ A∩B ∉ 𝒫`. Evaluated by direct quantification, so it
    /// is meant for small universes.
    pub fn satisfies_dual_conditions(family: &SetFamily, universe: &Universe) -> bool {
        if family.universe_id() != universe.id() || family.has(universe.full()) {
            return false;
        }
        let outside: Vec<Subset> = universe.powerset().filter(|s| !family.has(*s)).collect();
        let upward = outside.iter().all(|&b| {
            universe
                .powerset()
                .filter(|a| b.is_subset_of(*a))
                .all(|a| !family.has(a))
        });
        upward
            && outside
                .iter()
                .all(|&a| outside.iter().all(|&b| !family.has(a & b)))
    }

    /// `𝒫 = ∅`.
    pub fn empty(universe: &Universe) -> Self {
        Primal {
            universe: universe.clone(),
            members: SetFamily::empty(universe),
        }
    }

    /// `𝒫 = 2^X ∖ {X}`.
    pub fn maximal(universe: &Universe) -> Self {
        let full = universe.full();
        let members = SetFamily::filter_powerset(universe.id(), |s| s != full);
        Primal {
            universe: universe.clone(),
            members,
        }
    }

    /// `{A ⊆ X : p ∉ A}`.
    pub fn point(universe: &Universe, point: &str) -> Result<Self, SetError> {
        let x = universe.index_of(point)?;
        let members = SetFamily::filter_powerset(universe.id(), |s| !s.contains(x));
        Ok(Primal {
            universe: universe.clone(),
            members,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn members(&self) -> &SetFamily {
        &self.members
    }

    pub fn contains(&self, a: Subset) -> Result<bool, SetError> {
        self.members.contains(a)
    }

    pub(crate) fn has(&self, a: Subset) -> bool {
        self.members.has(a)
    }

    pub fn is_subprimal_of(&self, other: &Primal) -> bool {
        self.members.is_subfamily_of(&other.members)
    }
}

/// Every primal on `universe`, ordered by the characteristic pattern of the
/// family over the canonically ordered powerset.
pub fn enumerate_primals(universe: &Universe) -> Result<Vec<Primal>, SetError> {
    let n = universe.size();
    if n > MAX_ENUMERATION_POINTS {
        return Err(SetError::TooLarge {
            size: n,
            max: MAX_ENUMERATION_POINTS,
        });
    }
    let full = universe.full().bits() as u32;
    let mut out = Vec::new();
    // bit k of `pattern` marks subset k; bit `full` (the universe) stays clear
    for pattern in 0u32..1 << full {
        let member = |s: u32| pattern >> s & 1 == 1;
        let downward = (0..full)
            .filter(|&a| member(a))
            .all(|a| (0..a).filter(|b| b & !a == 0).all(member));
        if !downward {
            continue;
        }
        let splits =
            (0..=full).all(|a| member(a) || (0..=full).all(|b| member(b) || !member(a & b)));
        if splits {
            let family = SetFamily::from_bits(
                universe.id(),
                (0..full).filter(|&s| member(s)).map(|s| s as u16),
            );
            out.push(Primal {
                universe: universe.clone(),
                members: family,
            });
        }
    }
    Ok(out)
}

/// A topological space together with a primal on the same universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalSpace {
    topology: Topology,
    primal: Primal,
}

impl PrimalSpace {
    pub fn new(topology: Topology, primal: Primal) -> Result<Self, SetError> {
        if topology.universe().id() != primal.universe().id() {
            return Err(SetError::UniverseMismatch);
        }
        Ok(PrimalSpace { topology, primal })
    }

    pub fn universe(&self) -> &Universe {
        self.topology.universe()
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn primal(&self) -> &Primal {
        &self.primal
    }

    /// Same topology, different primal.
    pub fn with_primal(&self, primal: Primal) -> Result<Self, SetError> {
        PrimalSpace::new(self.topology.clone(), primal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Universe {
        Universe::letters(3).unwrap()
    }

    fn family(u: &Universe, sets: &[&[&str]]) -> SetFamily {
        SetFamily::new(u, sets.iter().map(|s| u.subset(s.iter()).unwrap())).unwrap()
    }

    #[test]
    fn validation_examples() {
        let u = abc();
        let f = family(&u, &[&[], &["b"], &["c"], &["b", "c"]]);
        assert!(Primal::validate(&f, &u).is_ok());
        assert!(Primal::satisfies_dual_conditions(&f, &u));
        let f = family(&u, &[&[], &["a"], &["b"], &["c"], &["a", "b"], &["a", "c"]]);
        assert!(Primal::validate(&f, &u).is_ok());
        let err = Primal::validate(&family(&u, &[&[], &["a", "b"]]), &u).unwrap_err();
        assert_eq!(
            err,
            PrimalError::NotDownwardClosed {
                superset: "{a,b}".into(),
                subset: "{a}".into()
            }
        );
        assert_eq!(err.condition(), "not-downward-closed");
    }

    #[test]
    fn other_violations() {
        let u = abc();
        let all = SetFamily::powerset(&u);
        assert_eq!(
            Primal::validate(&all, &u),
            Err(PrimalError::ContainsUniverse)
        );
        assert!(!Primal::satisfies_dual_conditions(&all, &u));
        // downward closed, but {a,b} ∩ {a,c} = {a} is a member while neither side is
        let f = family(&u, &[&[], &["a"], &["b"], &["c"], &["b", "c"]]);
        let err = Primal::validate(&f, &u).unwrap_err();
        assert_eq!(err.condition(), "intersection-violation");
        assert!(!Primal::satisfies_dual_conditions(&f, &u));
    }

    #[test]
    fn empty_family_is_a_primal() {
        let u = abc();
        let e = SetFamily::empty(&u);
        assert!(Primal::validate(&e, &u).is_ok());
        assert!(Primal::satisfies_dual_conditions(&e, &u));
        assert_eq!(Primal::empty(&u).members(), &e);
    }

    #[test]
    fn point_primal_examples() {
        let u = abc();
        let p = Primal::point(&u, "a").unwrap();
        assert_eq!(u.render_family(p.members()), "{{}, {b}, {c}, {b,c}}");
        let one = Universe::letters(1).unwrap();
        assert_eq!(
            one.render_family(Primal::point(&one, "a").unwrap().members()),
            "{{}}"
        );
        assert!(Primal::point(&u, "z").is_err());
        for name in ["a", "b", "c"] {
            let p = Primal::point(&u, name).unwrap();
            assert!(Primal::validate(p.members(), &u).is_ok());
        }
        assert!(Primal::validate(Primal::maximal(&u).members(), &u).is_ok());
    }

    #[test]
    fn enumeration() {
        let one = Universe::letters(1).unwrap();
        let ps = enumerate_primals(&one).unwrap();
        let rendered: Vec<String> = ps.iter().map(|p| one.render_family(p.members())).collect();
        assert_eq!(rendered, ["{}", "{{}}"]);
        for n in 1..=4 {
            let u = Universe::letters(n).unwrap();
            let ps = enumerate_primals(&u).unwrap();
            assert_eq!(ps.len(), 1 << n);
            assert!(ps
                .windows(2)
                .all(|w| { w[0].members().characteristic() < w[1].members().characteristic() }));
            for p in &ps {
                assert!(Primal::satisfies_dual_conditions(p.members(), &u));
            }
        }
        assert!(enumerate_primals(&Universe::letters(5).unwrap()).is_err());
    }

    #[test]
    fn space_requires_one_universe() {
        let u = abc();
        let v = Universe::letters(2).unwrap();
        assert_eq!(
            PrimalSpace::new(Topology::indiscrete(&u), Primal::empty(&v)),
            Err(SetError::UniverseMismatch)
        );
    }
}
