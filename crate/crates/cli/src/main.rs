use std::process::ExitCode;

use clap::Parser;
use shadows_cli::commands::{run, Cli};

fn main() -> ExitCode {
    // clap reports usage errors itself and exits with status 2
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match run(cli, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
