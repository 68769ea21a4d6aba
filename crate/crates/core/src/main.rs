use std::io;
use std::process::ExitCode;

use clap::Parser;
use ramanujan_lab::cli::{self, Cli};

fn main() -> ExitCode {
    let args = Cli::parse();
    let result = cli::run(&args, &mut io::stdout().lock());
    if let Err(e) = &result {
        eprintln!("ramlab: {e}");
    }
    ExitCode::from(cli::exit_code(&result))
}
