use std::process::ExitCode;

use clap::Parser;
use polylog_apery::cli::{emit, execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli).and_then(|o| emit(&o).map(|_| o.success)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
