use std::process::ExitCode;

use clap::Parser;
use qubit_thermalization::cli::{execute, validate, Cli, Command, RunArgs};

fn run(args: RunArgs) -> Result<(), Box<dyn std::error::Error>> {
    let threads = args.threads;
    let config = args.into_config()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?;
    pool.install(|| execute(&config, std::io::stdout().lock()))?;
    Ok(())
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run(args) => match run(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
        Command::Validate(args) => match args.into_config() {
            Ok(config) => {
                let report = validate(&config);
                print!("{report}");
                if report.is_ok() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::FAILURE
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
    }
}
