//! Driving the experiment runner from code instead of the `qtherm` binary.

use qubit_thermalization::cli::{
    execute, validate, Format, InitialStateSpec, Mode, Preset, RunConfig,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = RunConfig {
        mode: Mode::Sweep,
        eps1: 2.0,
        lambda: 1.0,
        state: Some(InitialStateSpec::Bloch([0.6, 0.0, 0.8])),
        t_stop: 2.0,
        t_points: 5,
        n_traj: 4_000,
        seed: 99,
        ..Default::default()
    };
    print!("{}", validate(&config));
    println!();
    execute(&config, std::io::stdout().lock())?;
    println!();

    let entropy = RunConfig {
        mode: Mode::Entropy,
        state: Some(InitialStateSpec::Preset(Preset::ClauserExample)),
        t_stop: 20.0,
        t_points: 5,
        format: Format::Json,
        ..Default::default()
    };
    let table = execute(&entropy, std::io::sink())?;
    println!(
        "entropy column: {:?}",
        table.column("entropy").unwrap_or_default()
    );
    Ok(())
}
