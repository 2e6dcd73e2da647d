use std::path::PathBuf;
use std::process::ExitCode;

use assocgeo::oracle::DEFAULT_BUDGET;
use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;

use input::CliError;

/// Evaluate the Grassmannian product Γ and dilations Π_r, and verify their
/// identities on small module spaces.
#[derive(Parser, Debug)]
#[command(name = "assocgeo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SpaceArgs {
    /// Vector space such as `GF(2)^3` or `Q^2`
    #[arg(long, conflicts_with = "space_file")]
    pub space: Option<String>,
    /// JSON space description: {"field": 2, "dim": 4, "generators": [...]}
    #[arg(long)]
    pub space_file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Extended,
    Operator,
    Affine,
    Brute,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Extended => "extended",
            Route::Operator => "operator",
            Route::Affine => "affine",
            Route::Brute => "brute",
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Γ(x,a,y,b,z)
    Gamma {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        z: String,
        #[arg(long, value_enum, default_value = "extended")]
        route: Route,
        #[command(flatten)]
        out: Output,
    },
    /// Π_r(x,a,z)
    Pi {
        #[command(flatten)]
        space: SpaceArgs,
        /// Scalar r
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        z: String,
        /// extended, operator (needs x ⊤ a) or brute
        #[arg(long, value_enum, default_value = "extended")]
        route: Route,
        #[command(flatten)]
        out: Output,
    },
    /// Run one verification suite, or all of them
    Verify {
        /// Suite id, or `routes` for the cross-route check
        suite_pos: Option<String>,
        #[arg(long, conflicts_with = "suite_pos")]
        suite: Option<String>,
        #[arg(long, conflicts_with_all = ["suite", "suite_pos"])]
        all: bool,
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// List every submodule
    Enumerate {
        #[command(flatten)]
        space: SpaceArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Connected components of the Grassmannian under transversality
    Components {
        #[command(flatten)]
        space: SpaceArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Imbed an associative pair and extract it again
    PairRoundtrip {
        /// JSON pair description
        #[arg(long)]
        pair: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Gamma { space, x, a, y, b, z, route, out } => {
            commands::gamma(&input::load_space(&space)?, [&x, &a, &y, &b, &z], route, out.json)
        }
        Command::Pi { space, r, x, a, z, route, out } => {
            commands::pi(&input::load_space(&space)?, &r, [&x, &a, &z], route, out.json)
        }
        Command::Verify { suite_pos, suite, all, space, budget, seed, out } => {
            let which = match (suite_pos.or(suite), all) {
                (_, true) => None,
                (Some(s), false) => Some(s),
                (None, false) => return Err(CliError::usage("give a suite id or --all")),
            };
            commands::verify(&input::load_space(&space)?, which.as_deref(), budget, seed, out.json)
        }
        Command::Enumerate { space, out } => commands::enumerate(&input::load_space(&space)?, out.json),
        Command::Components { space, out } => commands::components(&input::load_space(&space)?, out.json),
        Command::PairRoundtrip { pair, budget, seed, out } => commands::pair_roundtrip(&pair, budget, seed, out.json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
