use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use dragon_cli::{run, Cli, CliError};

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    let (text, code) = match result {
        Ok(text) => (text, 0),
        // Failed checks still produce a report worth keeping.
        Err(CliError::ChecksFailed(report)) => (report, 1),
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
