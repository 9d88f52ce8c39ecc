//! `nmg`: command-line front end for nmgraph.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "nmg", version, about = "Clique and chromatic computations on (n,m)-graphs")]
struct Cli {
    /// Structured JSON output instead of key: value lines.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for parallel sweeps (results stay in input order).
    #[arg(long, global = true, value_name = "T")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a construction as an .nmg document.
    #[command(subcommand)]
    Gen(GenCommand),

    /// Relative clique number, or check a given vertex set.
    RelativeClique(CliqueArgs),

    /// Absolute clique number, or check a given vertex set.
    AbsoluteClique(CliqueArgs),

    /// Exact chromatic number with a witness colouring.
    Chromatic {
        file: PathBuf,
        /// Largest target order to try.
        #[arg(long, value_name = "K")]
        max_order: Option<usize>,
    },

    /// Search for a homomorphism from G to H.
    Hom { g: PathBuf, h: PathBuf },

    /// Print the seeing graph with witnesses.
    Seeing {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', value_name = "V1,V2,...")]
        restrict: Option<Vec<usize>>,
    },

    /// Girth, triangle-freeness, planarity and embedding check.
    Check { file: PathBuf },

    /// Compare the fast solvers with brute-force references.
    #[command(subcommand)]
    Oracle(OracleCommand),

    /// Generate the tight construction and check its properties.
    VerifyTheorem(ParamArgs),
}

#[derive(Args, Debug, Clone, Copy)]
struct ParamArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
}

#[derive(Args, Debug)]
struct CliqueArgs {
    file: PathBuf,
    /// Check this vertex set instead of searching.
    #[arg(long, value_delimiter = ',', value_name = "V1,V2,...")]
    verify: Option<Vec<usize>>,
    /// Print the pairwise witnesses.
    #[arg(long)]
    certificate: bool,
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// The extremal triangle-free planar graph.
    Tight {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Two poles, three good vertices and three helpers.
    Exceptional {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        #[arg(long, default_value_t = 1)]
        beta: usize,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Two poles with common neighbours of the given label pairs.
    Fk {
        #[command(flatten)]
        params: ParamArgs,
        /// Label pairs as ALPHA:BETA, comma separated.
        #[arg(long, value_delimiter = ',', required = true, value_name = "A:B,...")]
        pairs: Vec<String>,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Check every labelled graph with 1..=K vertices.
    Sweep {
        #[arg(long, value_name = "K")]
        vertices: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Gen(GenCommand::Tight { params, output }) => commands::gen_tight(params.n, params.m, output),
        Command::Gen(GenCommand::Exceptional { params, alpha, beta, output }) => {
            commands::gen_exceptional(params.n, params.m, alpha, beta, output)
        }
        Command::Gen(GenCommand::Fk { params, pairs, output }) => commands::gen_fk(params.n, params.m, &pairs, output),
        Command::RelativeClique(a) => commands::relative_clique(&a.file, a.verify, a.certificate),
        Command::AbsoluteClique(a) => commands::absolute_clique(&a.file, a.verify, a.certificate),
        Command::Chromatic { file, max_order } => commands::chromatic(&file, max_order),
        Command::Hom { g, h } => commands::hom(&g, &h),
        Command::Seeing { file, restrict } => commands::seeing(&file, restrict),
        Command::Check { file } => commands::check(&file),
        Command::Oracle(OracleCommand::Sweep { vertices, params }) => {
            commands::oracle_sweep(vertices, params.n, params.m)
        }
        Command::VerifyTheorem(p) => commands::verify_theorem(p.n, p.m),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(outcome) => {
            outcome.print(json);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("nmg: {e}");
            ExitCode::from(2)
        }
    }
}
