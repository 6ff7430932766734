use std::fs;
use std::path::{Path, PathBuf};

use primaltop::{
    enumerate_primals, enumerate_topologies, sweep_many, DocumentError, OperatorKind, Primal,
    PrimalError, PrimalSpace, SetFamily, SpaceDocument, Strategy, Subset, TheoremError, TheoremId,
    Topology, TopologyError, Universe,
};
use thiserror::Error;

use crate::args::{Command, Operator, StrategyArg};
use crate::report::{AxiomLine, Body, Report, Row, TheoremResult, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BREACH: i32 = 3;

/// A command that produced no report.
#[derive(Debug, Error)]
pub enum Failure {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Document(DocumentError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Theorem(#[from] TheoremError),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Document(e) if e.is_validation() => EXIT_INVALID,
            _ => EXIT_USAGE,
        }
    }
}

pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
}

pub fn run(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Validate { input } => validate(input),
        Command::Compute {
            input,
            operator,
            set,
        } => compute(input, *operator, set.as_deref()),
        Command::Check { input, theorems } => check(input, theorems),
        Command::Sweep {
            n,
            strategy,
            theorems,
            samples,
            seed,
        } => sweep(*n, *strategy, theorems, *samples, *seed),
        Command::Enumerate { n } => enumerate(*n),
    }
}

fn read_document(path: &Path) -> Result<SpaceDocument, Failure> {
    let text = fs::read_to_string(path).map_err(|source| Failure::Io {
        path: path.to_owned(),
        source,
    })?;
    SpaceDocument::parse(&text).map_err(Failure::Document)
}

fn load_space(path: &Path) -> Result<(SpaceDocument, PrimalSpace), Failure> {
    let doc = read_document(path)?;
    let space = doc.to_space().map_err(Failure::Document)?;
    Ok((doc, space))
}

const TOPOLOGY_AXIOMS: [&str; 4] = [
    "contains-empty",
    "contains-universe",
    "closed-under-union",
    "closed-under-intersection",
];
const PRIMAL_AXIOMS: [&str; 3] = [
    "excludes-universe",
    "downward-closed",
    "intersection-condition",
];

/// Axioms checked before `failed` hold, `failed` itself fails, later ones
/// were not reached and are left out.
fn axiom_lines(structure: &str, names: &[&str], failed: Option<(usize, String)>) -> Vec<AxiomLine> {
    let upto = failed.as_ref().map_or(names.len(), |(i, _)| *i);
    let mut lines: Vec<AxiomLine> = names[..upto]
        .iter()
        .map(|a| AxiomLine {
            structure: structure.to_owned(),
            axiom: (*a).to_owned(),
            holds: true,
            detail: None,
        })
        .collect();
    if let Some((i, detail)) = failed {
        lines.push(AxiomLine {
            structure: structure.to_owned(),
            axiom: names[i].to_owned(),
            holds: false,
            detail: Some(detail),
        });
    }
    lines
}

fn topology_failure(e: &TopologyError) -> (usize, String) {
    let index = match e {
        TopologyError::MissingEmpty => 0,
        TopologyError::MissingUniverse => 1,
        TopologyError::NotClosedUnderUnion { .. } => 2,
        _ => 3,
    };
    (index, format!("{}: {e}", e.axiom()))
}

fn primal_failure(e: &PrimalError) -> (usize, String) {
    let index = match e {
        PrimalError::ContainsUniverse => 0,
        PrimalError::NotDownwardClosed { .. } => 1,
        _ => 2,
    };
    (index, format!("{}: {e}", e.condition()))
}

fn validate(input: &Path) -> Result<Outcome, Failure> {
    let doc = read_document(input)?;
    let universe = doc.universe().map_err(Failure::Document)?;
    let topology = doc.topology_family().map_err(Failure::Document)?;
    let primal = doc.primal_family().map_err(Failure::Document)?;
    let t = Topology::validate(&topology, &universe).err();
    let p = Primal::validate(&primal, &universe).err();
    let ok = t.is_none() && p.is_none();
    let mut axioms = axiom_lines(
        "topology",
        &TOPOLOGY_AXIOMS,
        t.as_ref().map(topology_failure),
    );
    axioms.extend(axiom_lines(
        "primal",
        &PRIMAL_AXIOMS,
        p.as_ref().map(primal_failure),
    ));
    let body = Body::Validate {
        space: doc.name,
        universe: doc.universe,
        axioms,
    };
    Ok(Outcome {
        report: Report::new(ok, body),
        exit_code: if ok { EXIT_OK } else { EXIT_INVALID },
    })
}

/// Accepts `{a,c}`, `a,c`, `{}` or `∅`.
pub fn parse_subset(universe: &Universe, text: &str) -> Result<Subset, Failure> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(trimmed);
    if inner.trim() == "∅" {
        return Ok(universe.empty());
    }
    let names: Vec<&str> = inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    universe
        .subset(names)
        .map_err(|e| Failure::Usage(format!("bad --set `{text}`: {e}")))
}

fn family_value(u: &Universe, family: &SetFamily) -> Value {
    Value::Family {
        members: family.iter().map(|s| u.render(s)).collect(),
    }
}

fn compute(input: &Path, operator: Operator, set: Option<&str>) -> Result<Outcome, Failure> {
    let (doc, space) = load_space(input)?;
    let u = space.universe();
    let kind = match operator {
        Operator::Diamond => Some(OperatorKind::Diamond),
        Operator::DiamondR => Some(OperatorKind::DiamondR),
        Operator::Cl => Some(OperatorKind::ClDiamond),
        Operator::ClR => Some(OperatorKind::ClDiamondR),
        _ => None,
    };
    let value = match (kind, set) {
        (Some(kind), Some(text)) => {
            let a = parse_subset(u, text)?;
            let image = space
                .apply(kind, a)
                .expect("subset parsed against this universe");
            Value::Set {
                input: u.render(a),
                output: u.render(image),
            }
        }
        (Some(kind), None) => Value::Table {
            rows: u
                .powerset()
                .map(|a| Row {
                    input: u.render(a),
                    output: u.render(space.apply(kind, a).expect("same universe")),
                })
                .collect(),
        },
        (None, Some(_)) => {
            return Err(Failure::Usage(format!(
                "operator {} yields a family and takes no --set",
                operator.name()
            )))
        }
        (None, None) => {
            let t = space.topology();
            let family = match operator {
                Operator::Tau => t.opens().clone(),
                Operator::TauR => space.tau_diamond_r(),
                Operator::TauDiamond => space.tau_diamond(),
                Operator::TauDelta => t.delta_open_family().clone(),
                Operator::Ro => t.regular_open_family().clone(),
                _ => space.base_family(),
            };
            family_value(u, &family)
        }
    };
    let body = Body::Compute {
        space: doc.name,
        operator: operator.name().to_owned(),
        value,
    };
    Ok(Outcome {
        report: Report::new(true, body),
        exit_code: EXIT_OK,
    })
}

pub fn parse_theorems(text: &str) -> Result<Vec<TheoremId>, Failure> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<TheoremId>()
                .map_err(|e| Failure::Usage(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()
        .and_then(|ids| {
            if ids.is_empty() {
                Err(Failure::Usage("no theorem ids given".into()))
            } else {
                Ok(ids)
            }
        })
}

fn results_outcome(results: &[TheoremResult]) -> (bool, i32) {
    if results.iter().any(TheoremResult::is_breach) {
        (false, EXIT_BREACH)
    } else {
        (true, EXIT_OK)
    }
}

fn check(input: &Path, theorems: &str) -> Result<Outcome, Failure> {
    let ids = parse_theorems(theorems)?;
    let (doc, space) = load_space(input)?;
    let results: Vec<TheoremResult> = primaltop::check_space(&space, &ids)
        .iter()
        .map(TheoremResult::from_check)
        .collect();
    let (ok, exit_code) = results_outcome(&results);
    let body = Body::Check {
        space: doc.name,
        results,
    };
    Ok(Outcome {
        report: Report::new(ok, body),
        exit_code,
    })
}

fn sweep(
    n: usize,
    strategy: StrategyArg,
    theorems: &str,
    samples: usize,
    seed: Option<u64>,
) -> Result<Outcome, Failure> {
    let ids = parse_theorems(theorems)?;
    let strategy = match (strategy, seed) {
        (StrategyArg::Exhaustive, _) => Strategy::Exhaustive,
        (StrategyArg::Sampled, Some(seed)) => Strategy::Sampled { samples, seed },
        (StrategyArg::Sampled, None) => {
            return Err(Failure::Usage("--strategy sampled needs --seed".into()))
        }
    };
    let results: Vec<TheoremResult> = sweep_many(&ids, n, strategy)?
        .iter()
        .map(TheoremResult::from_check)
        .collect();
    let (ok, exit_code) = results_outcome(&results);
    let (label, samples) = match strategy {
        Strategy::Exhaustive => ("exhaustive", None),
        Strategy::Sampled { samples, .. } => ("sampled", Some(samples)),
    };
    let body = Body::Sweep {
        n,
        strategy: label.to_owned(),
        samples,
        seed: strategy.seed(),
        results,
    };
    Ok(Outcome {
        report: Report::new(ok, body),
        exit_code,
    })
}

fn enumerate(n: usize) -> Result<Outcome, Failure> {
    if n == 0 || n > 4 {
        return Err(Failure::Usage(format!(
            "enumerate supports 1 ≤ n ≤ 4, got n = {n}"
        )));
    }
    let u = Universe::letters(n).expect("small universe");
    let topologies = enumerate_topologies(&u).expect("bound checked").len();
    let primals = enumerate_primals(&u).expect("bound checked").len();
    Ok(Outcome {
        report: Report::new(
            true,
            Body::Enumerate {
                n,
                topologies,
                primals,
            },
        ),
        exit_code: EXIT_OK,
    })
}
