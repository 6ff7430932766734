//! The report every command emits: a JSON body plus a table view rendered
//! from that body alone.

use std::fmt::Write;

use primaltop::{CheckReport, Status, TheoremId, TheoremKind};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub ok: bool,
    pub body: Body,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Body {
    Validate {
        space: Option<String>,
        universe: Vec<String>,
        axioms: Vec<AxiomLine>,
    },
    Compute {
        space: Option<String>,
        operator: String,
        value: Value,
    },
    Check {
        space: Option<String>,
        results: Vec<TheoremResult>,
    },
    Sweep {
        n: usize,
        strategy: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        samples: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
        results: Vec<TheoremResult>,
    },
    Enumerate {
        n: usize,
        topologies: usize,
        primals: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomLine {
    /// `topology` or `primal`.
    pub structure: String,
    pub axiom: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "kebab-case")]
pub enum Value {
    Set { input: String, output: String },
    Table { rows: Vec<Row> },
    Family { members: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub input: String,
    pub output: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremResult {
    pub id: TheoremId,
    pub kind: TheoremKind,
    pub status: Status,
    pub spaces_checked: usize,
    pub spaces_failed: usize,
    pub failures: usize,
    pub witnesses: Vec<WitnessLine>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessLine {
    pub topology: String,
    pub primal: String,
    pub subsets: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TheoremResult {
    /// Drops the timing, which would make reports differ between runs.
    pub fn from_check(r: &CheckReport) -> Self {
        let u = &r.universe;
        TheoremResult {
            id: r.theorem,
            kind: r.theorem.kind(),
            status: r.status,
            spaces_checked: r.spaces_checked,
            spaces_failed: r.spaces_failed,
            failures: r.failures,
            witnesses: r
                .witnesses
                .iter()
                .map(|w| WitnessLine {
                    topology: u.render_family(&w.topology),
                    primal: u.render_family(&w.primal),
                    subsets: w.subsets.iter().map(|&s| u.render(s)).collect(),
                    note: w.note.clone(),
                })
                .collect(),
            observations: r.observations.clone(),
        }
    }

    pub fn is_breach(&self) -> bool {
        self.kind == TheoremKind::Direct && self.status == Status::Fail
    }
}

impl Report {
    pub fn new(ok: bool, body: Body) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            ok,
            body,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        match &self.body {
            Body::Validate {
                space,
                universe,
                axioms,
            } => {
                heading(&mut out, "validate", space.as_deref());
                let _ = writeln!(out, "universe: {{{}}}", universe.join(","));
                for a in axioms {
                    let mark = if a.holds { "ok  " } else { "FAIL" };
                    let _ = write!(out, "{mark}  {:<9} {}", a.structure, a.axiom);
                    if let Some(d) = &a.detail {
                        let _ = write!(out, "  ({d})");
                    }
                    out.push('\n');
                }
            }
            Body::Compute {
                space,
                operator,
                value,
            } => {
                heading(&mut out, operator, space.as_deref());
                match value {
                    Value::Set { input, output } => {
                        let _ = writeln!(out, "{input} -> {output}");
                    }
                    Value::Table { rows } => {
                        let width = rows
                            .iter()
                            .map(|r| r.input.chars().count())
                            .max()
                            .unwrap_or(0);
                        for r in rows {
                            let pad = width - r.input.chars().count();
                            let _ =
                                writeln!(out, "{}{}  -> {}", r.input, " ".repeat(pad), r.output);
                        }
                    }
                    Value::Family { members } => {
                        let _ = writeln!(out, "{{{}}}", members.join(", "));
                        let _ = writeln!(out, "{} sets", members.len());
                    }
                }
            }
            Body::Check { space, results } => {
                heading(&mut out, "check", space.as_deref());
                results_table(&mut out, results);
            }
            Body::Sweep {
                n,
                strategy,
                samples,
                seed,
                results,
            } => {
                let _ = write!(out, "sweep n={n} strategy={strategy}");
                if let Some(k) = samples {
                    let _ = write!(out, " samples={k}");
                }
                if let Some(s) = seed {
                    let _ = write!(out, " seed={s}");
                }
                out.push('\n');
                results_table(&mut out, results);
            }
            Body::Enumerate {
                n,
                topologies,
                primals,
            } => {
                let _ = writeln!(out, "n={n}");
                let _ = writeln!(out, "topologies  {topologies}");
                let _ = writeln!(out, "primals     {primals}");
            }
        }
        out
    }
}

fn heading(out: &mut String, what: &str, space: Option<&str>) {
    match space {
        Some(name) => {
            let _ = writeln!(out, "{what} [{name}]");
        }
        None => {
            let _ = writeln!(out, "{what}");
        }
    }
}

fn results_table(out: &mut String, results: &[TheoremResult]) {
    let _ = writeln!(
        out,
        "{:<12} {:<13} {:<6} {:>7} {:>7} {:>9}",
        "id", "kind", "status", "spaces", "failed", "failures"
    );
    for r in results {
        let kind = match r.kind {
            TheoremKind::Direct => "direct",
            TheoremKind::Converse => "converse",
            TheoremKind::Informational => "informational",
        };
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
        };
        let _ = writeln!(
            out,
            "{:<12} {:<13} {:<6} {:>7} {:>7} {:>9}",
            r.id.key(),
            kind,
            status,
            r.spaces_checked,
            r.spaces_failed,
            r.failures
        );
        if let Some(w) = r.witnesses.first() {
            let _ = write!(out, "    first witness: ({})", w.subsets.join(", "));
            if r.spaces_checked > 1 {
                let _ = write!(out, " in τ={} 𝒫={}", w.topology, w.primal);
            }
            if let Some(note) = &w.note {
                let _ = write!(out, "  {note}");
            }
            out.push('\n');
        }
        for o in &r.observations {
            let _ = writeln!(out, "    {o}");
        }
    }
}
