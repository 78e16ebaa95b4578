//! `qwave`: train, evolve, sweep and count gates for the wave-equation circuits.

mod commands;
mod config;
mod svg;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Axis;
use config::RunArgs;

#[derive(Parser)]
#[command(name = "qwave", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Train the brickwall preparation circuit for the Ricker state.
    Train(RunArgs),
    /// Evolve and write |psi|^2 per grid point.
    Evolve(RunArgs),
    /// Sweep one axis and fit the infidelity scaling.
    Sweep {
        #[arg(long, value_enum)]
        axis: Axis,
        #[command(flatten)]
        args: RunArgs,
    },
    /// Count native gates of the compiled program over a range of n.
    Gatecount(RunArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Train(a) => a.resolve().and_then(|a| commands::train(&a)),
        Command::Evolve(a) => a.resolve().and_then(|a| commands::evolve(&a)),
        Command::Sweep { axis, args } => args.resolve().and_then(|a| commands::sweep(&a, axis)),
        Command::Gatecount(a) => a.resolve().and_then(|a| commands::gatecount(&a)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
