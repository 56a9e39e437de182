use std::process::ExitCode;

use clap::Parser;
use hnla_cli::{run, Cli, EXIT_INVALID};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            if let Some(msg) = &outcome.diagnostic {
                eprintln!("{msg}");
            }
            ExitCode::from(outcome.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(e.exit_code())
        }
    }
}
