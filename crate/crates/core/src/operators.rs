//! Operators of a primal topological space `(X, τ, 𝒫)`.
//!
//! * `A^⋄   = {x : ∀U ∈ O(X,x),  A^c ∪ U^c ∈ 𝒫}`
//! * `A^⋄_R = {x : ∀U ∈ RO(X,x), A^c ∪ U^c ∈ 𝒫}`
//! * `cl^⋄(A) = A ∪ A^⋄` and `cl^⋄_R(A) = A ∪ A^⋄_R`
//! * `τ^⋄ = {A : cl^⋄(A^c) = A^c}` and `τ^⋄_R = {A : cl^⋄_R(A^c) = A^c}`
//!
//! Both diamond operators are evaluated pointwise by quantifying over the
//! neighbourhood families, without shortcuts. [`OperatorTable`] materializes
//! an operator over the whole powerset.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::primal::PrimalSpace;
use crate::set::{SetError, SetFamily, Subset, Universe};
use crate::topology::{Topology, TopologyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorKind {
    Diamond,
    DiamondR,
    ClDiamond,
    ClDiamondR,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 4] = [
        OperatorKind::Diamond,
        OperatorKind::DiamondR,
        OperatorKind::ClDiamond,
        OperatorKind::ClDiamondR,
    ];

    pub fn label(self) -> &'static str {
        match self {
            OperatorKind::Diamond => "diamond",
            OperatorKind::DiamondR => "diamond_R",
            OperatorKind::ClDiamond => "cl_diamond",
            OperatorKind::ClDiamondR => "cl_diamond_R",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaseError {
    #[error("the base does not cover the universe; {uncovered} is left out")]
    DoesNotCover { uncovered: String },
    #[error("base intersection condition fails at point {point}: no member inside {a} ∩ {b} contains it")]
    IntersectionCondition { a: String, b: String, point: String },
    #[error(transparent)]
    Set(#[from] SetError),
    #[error("generated family is not a topology: {0}")]
    Topology(#[from] TopologyError),
}

impl PrimalSpace {
    fn check(&self, a: Subset) -> Result<(), SetError> {
        if a.universe_id() == self.universe().id() {
            Ok(())
        } else {
            Err(SetError::UniverseMismatch)
        }
    }

    fn diamond_over(&self, a: Subset, neighborhoods: &SetFamily) -> Subset {
        let ac = a.complement();
        let primal = self.primal();
        self.topology().points_where(|x| {
            neighborhoods
                .iter()
                .filter(|u| u.contains(x))
                .all(|u| primal.has(ac | u.complement()))
        })
    }

    pub(crate) fn eval(&self, kind: OperatorKind, a: Subset) -> Subset {
        let t = self.topology();
        match kind {
            OperatorKind::Diamond => self.diamond_over(a, t.opens()),
            OperatorKind::DiamondR => self.diamond_over(a, t.regular_open_family()),
            OperatorKind::ClDiamond => a | self.diamond_over(a, t.opens()),
            OperatorKind::ClDiamondR => a | self.diamond_over(a, t.regular_open_family()),
        }
    }

    pub fn apply(&self, kind: OperatorKind, a: Subset) -> Result<Subset, SetError> {
        self.check(a)?;
        Ok(self.eval(kind, a))
    }

    /// `A^⋄`.
    pub fn diamond(&self, a: Subset) -> Result<Subset, SetError> {
        self.apply(OperatorKind::Diamond, a)
    }

    /// `A^⋄_R`.
    pub fn diamond_r(&self, a: Subset) -> Result<Subset, SetError> {
        self.apply(OperatorKind::DiamondR, a)
    }

    /// `cl^⋄(A) = A ∪ A^⋄`.
    pub fn cl_diamond(&self, a: Subset) -> Result<Subset, SetError> {
        self.apply(OperatorKind::ClDiamond, a)
    }

    /// `cl^⋄_R(A) = A ∪ A^⋄_R`.
    pub fn cl_diamond_r(&self, a: Subset) -> Result<Subset, SetError> {
        self.apply(OperatorKind::ClDiamondR, a)
    }

    /// Sets whose complement is a fixed point of `closure`.
    fn induced(&self, closure: OperatorKind) -> SetFamily {
        let table = OperatorTable::build(self, closure);
        SetFamily::filter_powerset(self.universe().id(), |a| {
            let ac = a.complement();
            table.at(ac) == ac
        })
    }

    /// `τ^⋄`.
    pub fn tau_diamond(&self) -> SetFamily {
        self.induced(OperatorKind::ClDiamond)
    }

    /// `τ^⋄_R`.
    pub fn tau_diamond_r(&self) -> SetFamily {
        self.induced(OperatorKind::ClDiamondR)
    }

    /// `{T ∩ P : T ∈ τ_δ, P ∉ 𝒫}`, deduplicated. Keeps `∅`.
    pub fn base_family(&self) -> SetFamily {
        let u = self.universe();
        let outside: Vec<Subset> = u.powerset().filter(|p| !self.primal().has(*p)).collect();
        let meets = self
            .topology()
            .delta_open_family()
            .iter()
            .flat_map(|t| outside.iter().map(move |&p| (t & p).bits()))
            .collect::<Vec<_>>();
        SetFamily::from_bits(u.id(), meets)
    }

    pub fn induced_topologies(&self) -> InducedTopologyReport {
        InducedTopologyReport {
            tau: self.topology().opens().clone(),
            tau_delta: self.topology().delta_open_family().clone(),
            tau_diamond_r: self.tau_diamond_r(),
            tau_diamond: self.tau_diamond(),
            base: self.base_family(),
        }
    }
}

/// The families `τ`, `τ_δ`, `τ^⋄_R`, `τ^⋄` and the base of `τ^⋄_R` for one
/// space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedTopologyReport {
    pub tau: SetFamily,
    pub tau_delta: SetFamily,
    pub tau_diamond_r: SetFamily,
    pub tau_diamond: SetFamily,
    pub base: SetFamily,
}

/// Inclusions among the four topologies, recomputed on every call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InclusionFlags {
    pub delta_in_diamond_r: bool,
    pub diamond_r_in_diamond: bool,
    pub delta_in_tau: bool,
    pub tau_in_diamond: bool,
    pub tau_in_diamond_r: bool,
    pub diamond_r_in_tau: bool,
}

impl InducedTopologyReport {
    pub fn comparisons(&self) -> InclusionFlags {
        InclusionFlags {
            delta_in_diamond_r: self.tau_delta.is_subfamily_of(&self.tau_diamond_r),
            diamond_r_in_diamond: self.tau_diamond_r.is_subfamily_of(&self.tau_diamond),
            delta_in_tau: self.tau_delta.is_subfamily_of(&self.tau),
            tau_in_diamond: self.tau.is_subfamily_of(&self.tau_diamond),
            tau_in_diamond_r: self.tau.is_subfamily_of(&self.tau_diamond_r),
            diamond_r_in_tau: self.tau_diamond_r.is_subfamily_of(&self.tau),
        }
    }
}

/// All unions of subfamilies of `base`, checked to be a topology.
///
/// On a finite universe the union closure is a topology exactly when the base
/// intersection condition holds, so a violation of that condition is returned
/// as an error with its witness.
pub fn topology_from_base(base: &SetFamily, universe: &Universe) -> Result<Topology, BaseError> {
    if base.universe_id() != universe.id() {
        return Err(SetError::UniverseMismatch.into());
    }
    let covered = base.union();
    if !covered.is_full() {
        return Err(BaseError::DoesNotCover {
            uncovered: universe.render(covered.complement()),
        });
    }
    for (i, a) in base.iter().enumerate() {
        for b in base.members()[i..].iter().copied() {
            let meet = a & b;
            let stranded = meet
                .points()
                .find(|&x| !base.iter().any(|c| c.contains(x) && c.is_subset_of(meet)));
            if let Some(x) = stranded {
                return Err(BaseError::IntersectionCondition {
                    a: universe.render(a),
                    b: universe.render(b),
                    point: universe.point(x).unwrap_or_default().to_owned(),
                });
            }
        }
    }
    let mut present = vec![false; 1 << universe.size()];
    present[0] = true;
    let mut unions = vec![0u16];
    for m in base {
        for i in 0..unions.len() {
            let joined = unions[i] | m.bits();
            if !present[joined as usize] {
                present[joined as usize] = true;
                unions.push(joined);
            }
        }
    }
    let opens = SetFamily::from_bits(universe.id(), unions);
    Ok(Topology::validate(&opens, universe)?)
}

/// An operator on `2^X` materialized as a table indexed by subset pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorTable {
    name: String,
    universe: Universe,
    values: Vec<Subset>,
}

impl OperatorTable {
    pub fn build(space: &PrimalSpace, kind: OperatorKind) -> Self {
        let universe = space.universe().clone();
        let values = universe.powerset().map(|a| space.eval(kind, a)).collect();
        OperatorTable {
            name: kind.label().to_owned(),
            universe,
            values,
        }
    }

    /// Table of an arbitrary map. Values from another universe are rejected.
    pub fn from_fn(
        universe: &Universe,
        name: impl Into<String>,
        mut f: impl FnMut(Subset) -> Subset,
    ) -> Result<Self, SetError> {
        let mut values = Vec::with_capacity(1 << universe.size());
        for a in universe.powerset() {
            let v = f(a);
            if v.universe_id() != universe.id() {
                return Err(SetError::UniverseMismatch);
            }
            values.push(v);
        }
        Ok(OperatorTable {
            name: name.into(),
            universe: universe.clone(),
            values,
        })
    }

    pub fn identity(universe: &Universe) -> Self {
        OperatorTable::from_fn(universe, "identity", |a| a).expect("same universe")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn get(&self, a: Subset) -> Result<Subset, SetError> {
        if a.universe_id() != self.universe.id() {
            return Err(SetError::UniverseMismatch);
        }
        Ok(self.at(a))
    }

    pub(crate) fn at(&self, a: Subset) -> Subset {
        self.values[a.bits() as usize]
    }

    /// `(A, op(A))` pairs in canonical order of `A`.
    pub fn entries(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        self.universe.powerset().zip(self.values.iter().copied())
    }

    /// Sets fixed by the operator.
    pub fn fixed_points(&self) -> SetFamily {
        SetFamily::filter_powerset(self.universe.id(), |a| self.at(a) == a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KuratowskiAxiom {
    /// `c(∅) = ∅`
    PreservesEmpty,
    /// `A ⊆ c(A)`
    Extensive,
    /// `c(A∪B) = c(A) ∪ c(B)`
    Additive,
    /// `c(c(A)) = c(A)`
    Idempotent,
}

impl KuratowskiAxiom {
    pub const ALL: [KuratowskiAxiom; 4] = [
        KuratowskiAxiom::PreservesEmpty,
        KuratowskiAxiom::Extensive,
        KuratowskiAxiom::Additive,
        KuratowskiAxiom::Idempotent,
    ];
}

/// Most witnesses kept per axiom.
pub const MAX_AXIOM_WITNESSES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub axiom: KuratowskiAxiom,
    /// Failing argument tuples in canonical order, at most
    /// [`MAX_AXIOM_WITNESSES`] of them.
    pub witnesses: Vec<Vec<Subset>>,
    pub failures: usize,
}

impl AxiomOutcome {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiReport {
    pub operator: String,
    pub axioms: Vec<AxiomOutcome>,
}

impl KuratowskiReport {
    pub fn is_closure_operator(&self) -> bool {
        self.axioms.iter().all(AxiomOutcome::holds)
    }

    pub fn outcome(&self, axiom: KuratowskiAxiom) -> &AxiomOutcome {
        self.axioms
            .iter()
            .find(|o| o.axiom == axiom)
            .expect("every axiom is reported")
    }
}

/// Checks the four Kuratowski axioms on a table. Additivity is quadratic in
/// `2^n`.
pub fn kuratowski_check(table: &OperatorTable) -> KuratowskiReport {
    let u = &table.universe;
    let axioms = KuratowskiAxiom::ALL
        .iter()
        .map(|&axiom| {
            let mut witnesses = Vec::new();
            let mut failures = 0;
            let mut record = |w: Vec<Subset>| {
                failures += 1;
                if witnesses.len() < MAX_AXIOM_WITNESSES {
                    witnesses.push(w);
                }
            };
            match axiom {
                KuratowskiAxiom::PreservesEmpty => {
                    if !table.at(u.empty()).is_empty() {
                        record(vec![u.empty()]);
                    }
                }
                KuratowskiAxiom::Extensive => {
                    for a in u.powerset() {
                        if !a.is_subset_of(table.at(a)) {
                            record(vec![a]);
                        }
                    }
                }
                KuratowskiAxiom::Additive => {
                    for a in u.powerset() {
                        for b in u.powerset().filter(|b| *b >= a) {
                            if table.at(a | b) != table.at(a) | table.at(b) {
                                record(vec![a, b]);
                            }
                        }
                    }
                }
                KuratowskiAxiom::Idempotent => {
                    for a in u.powerset() {
                        let c = table.at(a);
                        if table.at(c) != c {
                            record(vec![a]);
                        }
                    }
                }
            }
            AxiomOutcome {
                axiom,
                witnesses,
                failures,
            }
        })
        .collect();
    KuratowskiReport {
        operator: table.name.clone(),
        axioms,
    }
}
