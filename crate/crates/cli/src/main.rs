//! `burnside`: presentations, classes and equality checks from the command line.
//!
//! Exit codes: 0 on success or `Equal`, 1 on `Distinct`, 2 on error, 3 when an
//! equality of decorated classes is undecided.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "burnside", version, about = "Equivariant Burnside group computations")]
struct Cli {
    /// Presentation cache directory.
    #[arg(long, global = true, default_value = ".burnside-cache")]
    cache: PathBuf,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest group order accepted.
    #[arg(long, global = true, default_value_t = burnside::io::DEFAULT_GROUP_CAP)]
    max_group_order: usize,
    /// Largest presentation basis accepted.
    #[arg(long, global = true, default_value_t = burnside::burncalc::MAX_BASIS)]
    max_basis: usize,
    /// Largest number of relation rows accepted.
    #[arg(long, global = true, default_value_t = burnside::burncalc::MAX_ROWS)]
    max_rows: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    B,
    Bc,
    K,
}

#[derive(Args, Debug)]
pub struct PresentationArgs {
    /// Group literal: a JSON file or inline JSON.
    #[arg(long)]
    group: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Defaults to `b`, or to the flavor of the class files.
    #[arg(long, value_enum)]
    flavor: Option<FlavorArg>,
    /// Filter file restricting the allowed `(H, Y)` pairs.
    #[arg(long)]
    filter: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Present a symbol group and report its invariants.
    Present(PresentationArgs),
    /// Class of a toric action.
    Class {
        #[arg(long)]
        action: PathBuf,
    },
    /// Decide equality of two classes.
    Eq {
        #[command(flatten)]
        p: PresentationArgs,
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
    },
    /// Blow up a torus-invariant center and compare classes.
    Blowup {
        #[arg(long)]
        action: PathBuf,
        /// Comma-separated ray indices.
        #[arg(long, value_delimiter = ',')]
        cone: Vec<usize>,
        /// Where to write the blown-up action.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Determinants of the weights at the isolated fixed points.
    Det {
        #[arg(long)]
        action: PathBuf,
    },
    /// Vanishing predicates of a symbol.
    Vanish {
        #[arg(long)]
        symbol: PathBuf,
    },
    /// Parents of a divisor symbol under the blow-up relation.
    Compress {
        #[arg(long)]
        symbol: PathBuf,
    },
    /// Bring a chart model into standard form.
    Standardize {
        #[arg(long)]
        charts: PathBuf,
    },
    /// Inspect or clear the presentation cache.
    Cache {
        #[command(subcommand)]
        action: CacheCommand,
    },
}

#[derive(Subcommand, Debug)]
enum CacheCommand {
    List,
    Clear,
}

/// Settings shared by every subcommand.
pub struct Config {
    pub cache: Option<burnside::burncalc::cache::Cache>,
    pub format: Format,
    pub max_group_order: usize,
    pub max_basis: usize,
    pub max_rows: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.max_group_order == 0 || cli.max_basis == 0 || cli.max_rows == 0 {
        eprintln!("error: caps must be positive");
        return ExitCode::from(2);
    }
    let cfg = Config {
        cache: (!cli.no_cache).then(|| burnside::burncalc::cache::Cache::new(&cli.cache)),
        format: cli.format,
        max_group_order: cli.max_group_order,
        max_basis: cli.max_basis,
        max_rows: cli.max_rows,
    };
    let result = match cli.command {
        Command::Present(p) => commands::present(&cfg, &p),
        Command::Class { action } => commands::class(&cfg, &action),
        Command::Eq { p, lhs, rhs } => commands::eq(&cfg, &p, &lhs, &rhs),
        Command::Blowup { action, cone, out } => commands::blowup(&cfg, &action, &cone, out.as_deref()),
        Command::Det { action } => commands::det(&cfg, &action),
        Command::Vanish { symbol } => commands::vanish(&cfg, &symbol),
        Command::Compress { symbol } => commands::compress(&cfg, &symbol),
        Command::Standardize { charts } => commands::standardize(&cfg, &charts),
        Command::Cache { action: CacheCommand::List } => commands::cache_list(&cfg),
        Command::Cache { action: CacheCommand::Clear } => commands::cache_clear(&cfg),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
