//! Executable checks for the identities between the operators, exhaustive
//! sweeps over small spaces, and counterexample search for converse claims.
//!
//! Every check evaluates a [`TheoremId`] on one [`PrimalSpace`] by running
//! through all subset tuples in canonical order. Sweeps walk the grid of
//! labeled topologies × primals on `n` points in canonical order
//! (topologies first, then primals), evaluating spaces in parallel and
//! merging results in grid order, so witnesses and counts never depend on
//! scheduling.

mod catalog;
mod checks;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use catalog::{TheoremId, TheoremKind, UnknownTheorem};

use crate::primal::{enumerate_primals, Primal, PrimalSpace};
use crate::set::{SetError, SetFamily, Subset, Universe};
use crate::topology::{enumerate_topologies, Topology, MAX_ENUMERATION_POINTS};
use checks::SpaceContext;

/// Largest `n` for which an exhaustive sweep is accepted.
pub const MAX_EXHAUSTIVE_POINTS: usize = 3;

/// Witnesses kept per report.
pub const MAX_WITNESSES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Unknown(#[from] UnknownTheorem),
    #[error("{strategy} sweeps support 1 ≤ n ≤ {max}, got n = {n}")]
    BoundExceeded {
        n: usize,
        max: usize,
        strategy: &'static str,
    },
    #[error("`{0}` is not a converse or independence claim")]
    NotAConverse(TheoremId),
    #[error(transparent)]
    Set(#[from] SetError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Strategy {
    Exhaustive,
    /// `samples` uniform draws of (topology, primal), seeded.
    Sampled {
        samples: usize,
        seed: u64,
    },
}

impl Strategy {
    fn label(self) -> &'static str {
        match self {
            Strategy::Exhaustive => "exhaustive",
            Strategy::Sampled { .. } => "sampled",
        }
    }

    pub fn seed(self) -> Option<u64> {
        match self {
            Strategy::Exhaustive => None,
            Strategy::Sampled { seed, .. } => Some(seed),
        }
    }
}

/// One failing instance: the space plus the subset tuple it failed on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub topology: SetFamily,
    pub primal: SetFamily,
    pub subsets: Vec<Subset>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub theorem: TheoremId,
    pub universe: Universe,
    pub spaces_checked: usize,
    pub spaces_failed: usize,
    pub status: Status,
    /// Failing tuples over all spaces; `witnesses` keeps the first
    /// [`MAX_WITNESSES`] of them.
    pub failures: usize,
    pub witnesses: Vec<Witness>,
    /// Facts recorded while checking a single space.
    pub observations: Vec<String>,
    pub seed: Option<u64>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// True when a failure here means the implementation is wrong.
    pub fn is_breach(&self) -> bool {
        self.theorem.is_direct() && !self.passed()
    }
}

/// Primals the monotonicity check compares a space's primal with.
fn comparison_primals(universe: &Universe) -> Vec<Primal> {
    if universe.size() <= MAX_ENUMERATION_POINTS {
        return enumerate_primals(universe).expect("size checked");
    }
    let mut out = vec![Primal::empty(universe), Primal::maximal(universe)];
    for p in universe.points() {
        out.push(Primal::point(universe, p).expect("known point"));
    }
    out
}

struct Accumulator {
    theorem: TheoremId,
    spaces_checked: usize,
    spaces_failed: usize,
    failures: usize,
    witnesses: Vec<Witness>,
    observations: Vec<String>,
}

impl Accumulator {
    fn new(theorem: TheoremId) -> Self {
        Accumulator {
            theorem,
            spaces_checked: 0,
            spaces_failed: 0,
            failures: 0,
            witnesses: Vec::new(),
            observations: Vec::new(),
        }
    }

    fn absorb(&mut self, space: &PrimalSpace, outcome: checks::Outcome) {
        self.spaces_checked += 1;
        if outcome.count > 0 {
            self.spaces_failed += 1;
        }
        self.failures += outcome.count;
        for (subsets, note) in outcome.tuples {
            if self.witnesses.len() == MAX_WITNESSES {
                break;
            }
            self.witnesses.push(Witness {
                topology: space.topology().opens().clone(),
                primal: space.primal().members().clone(),
                subsets,
                note,
            });
        }
        self.observations = outcome.notes;
    }

    fn finish(mut self, universe: Universe, seed: Option<u64>, elapsed: Duration) -> CheckReport {
        if self.spaces_checked != 1 {
            self.observations.clear();
        }
        CheckReport {
            theorem: self.theorem,
            universe,
            spaces_checked: self.spaces_checked,
            spaces_failed: self.spaces_failed,
            status: if self.failures == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            failures: self.failures,
            witnesses: self.witnesses,
            observations: self.observations,
            seed,
            elapsed,
        }
    }
}

/// Evaluates several ids on one space, sharing the operator tables.
pub fn check_space(space: &PrimalSpace, ids: &[TheoremId]) -> Vec<CheckReport> {
    let start = Instant::now();
    let others = comparison_primals(space.universe());
    let ctx = SpaceContext::new(space, &others);
    ids.iter()
        .map(|&id| {
            let mut acc = Accumulator::new(id);
            acc.absorb(space, ctx.evaluate(id));
            acc.finish(space.universe().clone(), None, start.elapsed())
        })
        .collect()
}

pub fn check_theorem(id: TheoremId, space: &PrimalSpace) -> CheckReport {
    check_space(space, &[id])
        .pop()
        .expect("one id in, one report out")
}

/// The (topology, primal) grid a sweep walks, in evaluation order.
fn grid(
    n: usize,
    strategy: Strategy,
) -> Result<(Universe, Vec<PrimalSpace>, Vec<Primal>), TheoremError> {
    let max = match strategy {
        Strategy::Exhaustive => MAX_EXHAUSTIVE_POINTS,
        Strategy::Sampled { .. } => MAX_ENUMERATION_POINTS,
    };
    if n == 0 || n > max {
        return Err(TheoremError::BoundExceeded {
            n,
            max,
            strategy: strategy.label(),
        });
    }
    let universe = Universe::letters(n)?;
    let topologies: Vec<Topology> = enumerate_topologies(&universe)?;
    let primals = enumerate_primals(&universe)?;
    let pair = |t: usize, p: usize| {
        PrimalSpace::new(topologies[t].clone(), primals[p].clone()).expect("same universe")
    };
    let spaces = match strategy {
        Strategy::Exhaustive => (0..topologies.len())
            .flat_map(|t| (0..primals.len()).map(move |p| (t, p)))
            .map(|(t, p)| pair(t, p))
            .collect(),
        Strategy::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples)
                .map(|_| {
                    let t = rng.random_range(0..topologies.len());
                    let p = rng.random_range(0..primals.len());
                    pair(t, p)
                })
                .collect()
        }
    };
    Ok((universe, spaces, primals))
}

/// Runs every id over the grid for `n` points.
pub fn sweep_many(
    ids: &[TheoremId],
    n: usize,
    strategy: Strategy,
) -> Result<Vec<CheckReport>, TheoremError> {
    let start = Instant::now();
    let (universe, spaces, primals) = grid(n, strategy)?;
    let per_space: Vec<Vec<checks::Outcome>> = spaces
        .par_iter()
        .map(|space| {
            let ctx = SpaceContext::new(space, &primals);
            ids.iter().map(|&id| ctx.evaluate(id)).collect()
        })
        .collect();
    let mut accs: Vec<Accumulator> = ids.iter().map(|&id| Accumulator::new(id)).collect();
    for (space, outcomes) in spaces.iter().zip(per_space) {
        for (acc, outcome) in accs.iter_mut().zip(outcomes) {
            acc.absorb(space, outcome);
        }
    }
    let elapsed = start.elapsed();
    Ok(accs
        .into_iter()
        .map(|acc| acc.finish(universe.clone(), strategy.seed(), elapsed))
        .collect())
}

pub fn sweep(id: TheoremId, n: usize, strategy: Strategy) -> Result<CheckReport, TheoremError> {
    Ok(sweep_many(&[id], n, strategy)?
        .pop()
        .expect("one id in, one report out"))
}

/// First space in sweep order on which a converse claim fails, reported with
/// that space's failing tuples. Passes when no space refutes the claim.
pub fn find_counterexample(
    id: TheoremId,
    n: usize,
    strategy: Strategy,
) -> Result<CheckReport, TheoremError> {
    if id.kind() != TheoremKind::Converse {
        return Err(TheoremError::NotAConverse(id));
    }
    let start = Instant::now();
    let (universe, spaces, primals) = grid(n, strategy)?;
    let first = spaces
        .par_iter()
        .enumerate()
        .filter_map(|(i, space)| {
            let outcome = SpaceContext::new(space, &primals).evaluate(id);
            (outcome.count > 0).then_some((i, outcome))
        })
        .min_by_key(|(i, _)| *i);
    let mut acc = Accumulator::new(id);
    match first {
        Some((i, outcome)) => {
            acc.absorb(&spaces[i], outcome);
            acc.spaces_checked = i + 1;
        }
        None => acc.spaces_checked = spaces.len(),
    }
    acc.observations.clear();
    Ok(acc.finish(universe, strategy.seed(), start.elapsed()))
}

/// Compares [`Primal::validate`] with the complement-form conditions on
/// every family of subsets of an `n`-point universe (`n ≤ 4`).
pub fn primal_characterizations_agree(n: usize) -> Result<CheckReport, TheoremError> {
    if n == 0 || n > MAX_ENUMERATION_POINTS {
        return Err(TheoremError::BoundExceeded {
            n,
            max: MAX_ENUMERATION_POINTS,
            strategy: "family",
        });
    }
    let start = Instant::now();
    let universe = Universe::letters(n)?;
    let subsets: Vec<Subset> = universe.powerset().collect();
    let count = 1u64 << subsets.len();
    let mismatches: Vec<SetFamily> = (0..count)
        .into_par_iter()
        .filter_map(|pattern| {
            let fam = SetFamily::new(
                &universe,
                subsets
                    .iter()
                    .copied()
                    .filter(|s| pattern >> s.bits() & 1 == 1),
            )
            .expect("same universe");
            let direct = Primal::validate(&fam, &universe).is_ok();
            (direct != Primal::satisfies_dual_conditions(&fam, &universe)).then_some(fam)
        })
        .collect();
    let failures = mismatches.len();
    let witnesses = mismatches
        .into_iter()
        .take(MAX_WITNESSES)
        .map(|fam| Witness {
            topology: SetFamily::empty(&universe),
            primal: fam,
            subsets: vec![],
            note: Some("characterizations disagree".into()),
        })
        .collect();
    Ok(CheckReport {
        theorem: TheoremId::C23,
        universe,
        spaces_checked: count as usize,
        spaces_failed: failures,
        status: if failures == 0 {
            Status::Pass
        } else {
            Status::Fail
        },
        failures,
        witnesses,
        observations: vec![],
        seed: None,
        elapsed: start.elapsed(),
    })
}
