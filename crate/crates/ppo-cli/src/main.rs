//! `ppo` — phase point operator toolkit for odd prime dimensions.
//!
//! Subcommands reproduce the class tables, fixed-point tables, orbit
//! counts, and the spectra census, print Wigner distributions, and run
//! the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input,
//! 3 infeasible method for the requested dimension, 4 tolerance collision.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_BAD_INPUT: u8 = 2;
pub const EXIT_INFEASIBLE: u8 = 3;
pub const EXIT_TOLERANCE_COLLISION: u8 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Sl,
    Esl,
}

impl GroupArg {
    pub fn kind(self) -> ppo_core::GroupKind {
        match self {
            GroupArg::Sl => ppo_core::GroupKind::Sl,
            GroupArg::Esl => ppo_core::GroupKind::Esl,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Burnside,
    Explicit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Field,
    Group,
    Hilbert,
    Coords,
    Orbits,
    Spectra,
    All,
}

#[derive(Parser)]
#[command(
    name = "ppo",
    version,
    about = "Phase point operators, Clifford orbits, and spectra in odd prime dimensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy class catalog: label, size, cyclic order, representative.
    Classes {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "sl")]
        group: GroupArg,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Orbit counts of the group action on affine planes.
    Orbits {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "sl")]
        group: GroupArg,
        #[arg(long, value_enum, default_value = "burnside")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Census of distinct phase-point-operator spectra per affine plane.
    Spectra {
        #[arg(long)]
        n: u64,
        /// Spectrum comparison tolerance.
        #[arg(long, default_value_t = ppo_core::spectra::DEFAULT_SPECTRUM_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Cache directory for computed censuses.
        #[arg(long, default_value = "./.ppo-cache")]
        cache_dir: std::path::PathBuf,
    },
    /// Fixed phase-space points, net labels, and planes per conjugacy class.
    FixedPoints {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "sl")]
        group: GroupArg,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Wigner distribution of a state over the plane of a given net label.
    Wigner {
        #[arg(long)]
        n: u64,
        /// Net label, comma-separated: r_0,...,r_N.
        #[arg(long)]
        rvec: String,
        /// State: "mixed", "mub:m,r" (m in 0..N or "inf"), or "basis:k".
        #[arg(long, default_value = "mixed")]
        state: String,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
    /// Run the invariant suites and report pass/fail per property.
    Verify {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Seed for the randomized property samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classes {
            n,
            group,
            format,
            out,
        } => commands::classes(n, group, format, out),
        Command::Orbits {
            n,
            group,
            method,
            format,
            out,
        } => commands::orbits(n, group, method, format, out),
        Command::Spectra {
            n,
            tol,
            format,
            out,
            cache_dir,
        } => commands::spectra(n, tol, format, out, cache_dir),
        Command::FixedPoints {
            n,
            group,
            format,
            out,
        } => commands::fixed_points(n, group, format, out),
        Command::Wigner {
            n,
            rvec,
            state,
            format,
        } => commands::wigner(n, &rvec, &state, format),
        Command::Verify { n, suite, seed } => commands::verify(n, suite, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

/// Error carrying the process exit code.
pub struct CmdError {
    pub code: u8,
    pub message: String,
}

impl CmdError {
    pub fn bad_input(message: impl Into<String>) -> CmdError {
        CmdError {
            code: EXIT_BAD_INPUT,
            message: message.into(),
        }
    }

    pub fn infeasible(message: impl Into<String>) -> CmdError {
        CmdError {
            code: EXIT_INFEASIBLE,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> CmdError {
        CmdError {
            code: EXIT_BAD_INPUT,
            message: e.to_string(),
        }
    }
}
