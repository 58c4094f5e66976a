use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use increg_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            if let CliError::VerificationFailed { report, .. } = &err {
                print!("{report}");
            }
            let _ = std::io::stdout().flush();
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
