use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use betti_cone::cli::{run, Cli, RunConfig};

fn main() -> ExitCode {
    let result = RunConfig::from_cli(Cli::parse()).and_then(|config| run(&config));
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(outcome.text.as_bytes());
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
