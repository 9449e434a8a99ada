use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use floparr::{run, Cli, CliError, Workspace};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli, &Workspace::from_env()).and_then(|outcome| {
        match &cli.out {
            Some(path) => {
                std::fs::write(path, &outcome.text).map_err(|source| CliError::Io { path: path.clone(), source })?
            }
            None => std::io::stdout()
                .write_all(outcome.text.as_bytes())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })?,
        }
        Ok(outcome.status)
    });
    match result {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("floparr: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
