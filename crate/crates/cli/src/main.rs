use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let args = runoff::cli::Cli::parse();
    match runoff::cli::run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
