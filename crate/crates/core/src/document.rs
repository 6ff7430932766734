//! JSON documents describing a primal space, and the bundled fixtures.
//!
//! ```json
//! {
//!   "name": "EX-A",
//!   "universe": ["a", "b", "c"],
//!   "topology": [[], ["b"], ["c"], ["b", "c"], ["a", "c"], ["a", "b", "c"]],
//!   "primal": [[], ["b"], ["c"], ["b", "c"]]
//! }
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::primal::{Primal, PrimalError, PrimalSpace};
use crate::set::{SetError, SetFamily, Universe};
use crate::topology::{Topology, TopologyError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub universe: Vec<String>,
    pub topology: Vec<Vec<String>>,
    pub primal: Vec<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed space document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid universe: {0}")]
    Universe(SetError),
    #[error("invalid subset in {field}: {source}")]
    Subset {
        field: &'static str,
        source: SetError,
    },
    #[error("invalid topology: {0}")]
    Topology(#[from] TopologyError),
    #[error("invalid primal: {0}")]
    Primal(#[from] PrimalError),
}

impl DocumentError {
    /// Parse problems versus axiom violations.
    pub fn is_validation(&self) -> bool {
        matches!(self, DocumentError::Topology(_) | DocumentError::Primal(_))
    }
}

impl SpaceDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn universe(&self) -> Result<Universe, DocumentError> {
        Universe::new(self.universe.iter().cloned()).map_err(DocumentError::Universe)
    }

    fn family(
        universe: &Universe,
        sets: &[Vec<String>],
        field: &'static str,
    ) -> Result<SetFamily, DocumentError> {
        let members = sets
            .iter()
            .map(|s| universe.subset(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|source| DocumentError::Subset { field, source })?;
        SetFamily::new(universe, members).map_err(|source| DocumentError::Subset { field, source })
    }

    pub fn topology_family(&self) -> Result<SetFamily, DocumentError> {
        Self::family(&self.universe()?, &self.topology, "topology")
    }

    pub fn primal_family(&self) -> Result<SetFamily, DocumentError> {
        Self::family(&self.universe()?, &self.primal, "primal")
    }

    pub fn to_space(&self) -> Result<PrimalSpace, DocumentError> {
        let universe = self.universe()?;
        let topology = Topology::validate(&self.topology_family()?, &universe)?;
        let primal = Primal::validate(&self.primal_family()?, &universe)?;
        Ok(PrimalSpace::new(topology, primal).expect("both built over one universe"))
    }

    pub fn from_space(name: Option<String>, space: &PrimalSpace) -> Self {
        let u = space.universe();
        let names = |f: &SetFamily| f.iter().map(|s| u.names_of(s)).collect();
        SpaceDocument {
            name,
            universe: u.points().to_vec(),
            topology: names(space.topology().opens()),
            primal: names(space.primal().members()),
        }
    }
}

/// The six example spaces, keyed `EX-A` … `EX-F`.
pub mod fixtures {
    use super::{DocumentError, PrimalSpace, SpaceDocument};

    pub const NAMES: [&str; 6] = ["EX-A", "EX-B", "EX-C", "EX-D", "EX-E", "EX-F"];

    pub fn source(name: &str) -> Option<&'static str> {
        Some(match name.to_ascii_uppercase().as_str() {
            "EX-A" => include_str!("../fixtures/ex-a.json"),
            "EX-B" => include_str!("../fixtures/ex-b.json"),
            "EX-C" => include_str!("../fixtures/ex-c.json"),
            "EX-D" => include_str!("../fixtures/ex-d.json"),
            "EX-E" => include_str!("../fixtures/ex-e.json"),
            "EX-F" => include_str!("../fixtures/ex-f.json"),
            _ => return None,
        })
    }

    /// Loads a bundled fixture; panics on an unknown name.
    pub fn load(name: &str) -> PrimalSpace {
        try_load(name)
            .unwrap_or_else(|| panic!("unknown fixture {name}"))
            .expect("bundled fixtures are valid")
    }

    pub fn try_load(name: &str) -> Option<Result<PrimalSpace, DocumentError>> {
        source(name).map(|text| SpaceDocument::parse(text)?.to_space())
    }
}
