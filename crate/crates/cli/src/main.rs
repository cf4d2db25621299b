use std::process::ExitCode;

use clap::Parser;

mod args;
mod bench;
mod commands;
mod verify;

use args::Cli;

/// Why a command failed; decides the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad input file or parameters: exit 2.
    Input(anyhow::Error),
    /// A verification suite reported a failed check: exit 3.
    Verification(String),
    /// Anything else: exit 1.
    Internal(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Verification(_) => 3,
            Failure::Internal(_) => 1,
        }
    }
}

impl From<double_wedge::Error> for Failure {
    fn from(e: double_wedge::Error) -> Self {
        use double_wedge::Error as E;
        match e {
            E::Parse(_)
            | E::InvalidArgument(_)
            | E::VerticalImage(_)
            | E::HourglassInput(_)
            | E::Degenerate(_) => Failure::Input(e.into()),
            E::ArrangementMismatch | E::Validation(_) => Failure::Internal(e.into()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(e) => eprintln!("error: {e:#}"),
                Failure::Verification(msg) => eprintln!("verification failed: {msg}"),
                Failure::Internal(e) => eprintln!("internal error: {e:#}"),
            }
            ExitCode::from(f.code())
        }
    }
}
