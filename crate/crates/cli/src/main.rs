use std::process::ExitCode;

use clap::Parser;
use primaltop_cli::args::{Cli, Format};
use primaltop_cli::commands::EXIT_USAGE;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match primaltop_cli::run(&cli.command) {
        Ok(outcome) => {
            match cli.format {
                Format::Machine => println!("{}", outcome.report.to_json()),
                Format::Table => print!("{}", outcome.report.to_table()),
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
