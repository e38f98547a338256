use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use packsyz::cli::{execute, Cli};
use packsyz::error::{CliError, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = execute(&cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed) => CliError::Failed.into_exit(),
        Err(e) => {
            eprintln!("error: {e}");
            e.into_exit()
        }
    }
}
