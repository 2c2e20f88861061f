use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use trace_horizon_cli::args::Cli;
use trace_horizon_cli::{run, Context, EXIT_PARSE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let outcome = Context::from_env().and_then(|ctx| run(&cli, &ctx));
    match outcome {
        Ok(done) => {
            // A closed pipe (e.g. `| head`) is not an error for the run itself.
            let _ = writeln!(std::io::stdout().lock(), "{}", done.report.to_json());
            ExitCode::from(done.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
