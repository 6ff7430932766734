//! Computation engine for finite primal topological spaces.
//!
//! Builds topologies and primals over universes of at most 16 points,
//! evaluates the diamond operators `A^⋄`, `A^⋄_R`, their closures and the
//! induced topologies `τ^⋄`, `τ^⋄_R`, and checks the known identities between
//! them exhaustively on small spaces.

pub mod document;
pub mod operators;
pub mod primal;
pub mod set;
pub mod theorems;
pub mod topology;

pub use document::{fixtures, DocumentError, SpaceDocument};
pub use operators::{
    kuratowski_check, topology_from_base, BaseError, InclusionFlags, InducedTopologyReport,
    KuratowskiAxiom, KuratowskiReport, OperatorKind, OperatorTable,
};
pub use primal::{enumerate_primals, Primal, PrimalError, PrimalSpace};
pub use set::{SetError, SetFamily, Subset, Universe, UniverseId, MAX_POINTS};
pub use theorems::{
    check_space, check_theorem, find_counterexample, primal_characterizations_agree, sweep,
    sweep_many, CheckReport, Status, Strategy, TheoremError, TheoremId, TheoremKind, Witness,
};
pub use topology::{enumerate_topologies, Topology, TopologyError};
