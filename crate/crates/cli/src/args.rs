use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "primaltop",
    version,
    about = "Operators and theorem checks on finite primal topological spaces"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Machine, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Machine,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a space document against the topology and primal axioms.
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
    /// Evaluate an operator on one subset, or tabulate it.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        operator: Operator,
        /// Subset such as `{a,c}` or `a,c`; omit for the whole table.
        #[arg(long)]
        set: Option<String>,
    },
    /// Run catalog properties on one space.
    Check {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated ids, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
    },
    /// Run catalog properties over every space on n points, or a seeded sample.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
        strategy: StrategyArg,
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Required with `--strategy sampled`.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Count the topologies and primals on n points.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    Diamond,
    DiamondR,
    Cl,
    ClR,
    Tau,
    TauR,
    TauDiamond,
    TauDelta,
    Ro,
    Base,
}

impl Operator {
    pub fn name(self) -> &'static str {
        match self {
            Operator::Diamond => "diamond",
            Operator::DiamondR => "diamond-r",
            Operator::Cl => "cl",
            Operator::ClR => "cl-r",
            Operator::Tau => "tau",
            Operator::TauR => "tau-r",
            Operator::TauDiamond => "tau-diamond",
            Operator::TauDelta => "tau-delta",
            Operator::Ro => "ro",
            Operator::Base => "base",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Exhaustive,
    Sampled,
}
