use std::io;
use std::process::ExitCode;

use clap::Parser;
use qwrt_cli::args::Cli;
use qwrt_cli::{run, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    let config = match cli.into_config() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let code = run(&config, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
