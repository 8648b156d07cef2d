//! `crossnest`: command-line access to the counting, series, bijection and
//! verification routines.
//!
//! Exit codes: 0 on success, 1 when a request exceeds a configured bound or
//! a check fails, 2 on argument or input errors.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::{Failure, Output};

fn configure_threads() {
    let Ok(value) = std::env::var("CROSSNEST_THREADS") else {
        return;
    };
    match value.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("crossnest: could not size the thread pool: {e}");
            }
        }
        _ => eprintln!("crossnest: ignoring CROSSNEST_THREADS={value:?}; expected a positive integer"),
    }
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let work = cli.max_work;
    match &cli.command {
        Command::Count(a) => commands::count(a, work),
        Command::Series(a) => commands::series(a, work),
        Command::Gf(a) => commands::gf(a),
        Command::Poly(a) => commands::poly(a),
        Command::Biject(a) => commands::biject(a, work),
        Command::Verify(a) => commands::verify(a),
        Command::Fit(a) => commands::fit(a, work),
        Command::Enumerate(a) => commands::enumerate(a, work),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match dispatch(&cli) {
        Ok(out) => {
            let payload = match cli.format {
                Format::Text => out.text,
                Format::Json => out.json.to_string(),
            };
            let mut stdout = std::io::stdout().lock();
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            if !payload.is_empty() && writeln!(stdout, "{payload}").is_err() {
                return ExitCode::SUCCESS;
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("crossnest: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Infeasible(msg)) => {
            eprintln!("crossnest: {msg}");
            ExitCode::from(1)
        }
    }
}
