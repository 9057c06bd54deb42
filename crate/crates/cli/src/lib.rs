//! Command-line front end for `krein-frames`: reads a JSON document of
//! named spaces, families, operators and specs, runs one operation and
//! writes JSON.
//!
//! Exit codes: 0 on success, 1 on malformed input or usage, 2 when the
//! answer is negative (not a frame, infeasible norms, degenerate range,
//! not similar).

pub mod commands;
pub mod document;

use clap::{Parser, Subcommand, ValueEnum};
use krein_frames::construction::Flavor;
use krein_frames::linalg::DEFAULT_RANK_TOL;

pub use commands::{Outcome, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK};
pub use document::Document;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct InputError(String);

impl InputError {
    pub fn new(msg: impl Into<String>) -> Self {
        Self(msg.into())
    }
}

#[derive(Debug, Parser)]
#[command(name = "kframes", version, about = "Frames on Pontryagin spaces")]
pub struct Cli {
    /// Input document, `-` for stdin.
    #[arg(long, global = true, default_value = "-")]
    pub input: String,
    /// Output file, `-` for stdout.
    #[arg(long, global = true, default_value = "-")]
    pub output: String,
    /// Relative rank tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_RANK_TOL)]
    pub tol: f64,
    /// Seed for randomized steps. Every current command is deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Frame check and optimal bounds.
    Validate {
        #[arg(long)]
        family: String,
    },
    /// Family with a prescribed operator and prescribed norms.
    Construct {
        #[arg(long)]
        operator: String,
        #[arg(long)]
        norms: String,
        #[arg(long, value_enum, default_value_t = FlavorArg::Hilbert)]
        flavor: FlavorArg,
        /// Name of the new family.
        #[arg(long, default_value = "constructed")]
        name: String,
    },
    /// Dilation to a larger space.
    Extend {
        #[arg(long)]
        family: String,
        /// Name of the new space and family.
        #[arg(long, default_value = "dilated")]
        name: String,
    },
    /// Coupling of two families on a product space.
    Couple {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Name of the new space and family.
        #[arg(long, default_value = "coupled")]
        name: String,
    },
    /// Similarity test with intertwiner.
    Similar {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Hilbert,
    Pontryagin,
    JfamPontryagin,
    JfamHilbert,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Hilbert => Flavor::HilbertFrame,
            FlavorArg::Pontryagin => Flavor::PontryaginFrame,
            FlavorArg::JfamPontryagin => Flavor::JFamilyPontryagin,
            FlavorArg::JfamHilbert => Flavor::JFamilyHilbert,
        }
    }
}

/// Parses `input` and runs the selected command.
pub fn run(cli: &Cli, input: &str) -> Result<Outcome, InputError> {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(InputError::new("--tol must be positive"));
    }
    let doc = Document::parse(input)?;
    match &cli.command {
        Command::Validate { family } => commands::cmd_validate(&doc, family, cli.tol),
        Command::Construct {
            operator,
            norms,
            flavor,
            name,
        } => commands::cmd_construct(&doc, operator, norms, (*flavor).into(), name),
        Command::Extend { family, name } => commands::cmd_extend(&doc, family, name, cli.tol),
        Command::Couple { left, right, name } => {
            commands::cmd_couple(&doc, left, right, name, cli.tol)
        }
        Command::Similar { left, right } => commands::cmd_similar(&doc, left, right, cli.tol),
    }
}
