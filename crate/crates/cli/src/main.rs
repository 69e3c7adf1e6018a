//! `fsbasis`: admissible monomials, characters, straightening and oracle checks
//! for the principal subspaces `W(Lambda_r)`.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Outcome;

#[derive(Parser)]
#[command(name = "fsbasis", version, about = "Particle bases of principal subspaces of level one sl(l+1)^ modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List admissible monomials grouped by (weight, degree).
    Enumerate(EnumerateArgs),
    /// Graded character, from the product formula, by counting, or both.
    Character(CharacterArgs),
    /// Rewrite a monomial in the admissible basis.
    Straighten(StraightenArgs),
    /// Check the operator identities and the rank of every sector.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct Common {
    /// Rank l of sl(l+1).
    #[arg(long)]
    rank: usize,

    /// Output format; json is canonical.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Fermionic,
    Enumerative,
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Rewriting,
    Elimination,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    common: Common,

    /// Module index r (highest weight Lambda_r).
    #[arg(long, default_value_t = 0)]
    module: usize,

    /// Largest degree listed.
    #[arg(long, default_value_t = 6)]
    cap: u32,

    /// Only this color weight, as n1,n2,...
    #[arg(long)]
    weight: Option<String>,
}

#[derive(Args)]
struct CharacterArgs {
    #[command(flatten)]
    common: Common,

    #[arg(long, default_value_t = 0)]
    module: usize,

    /// Truncation order: coefficients of q^0..q^cap.
    #[arg(long, default_value_t = 10)]
    cap: usize,

    /// Character of a single color weight instead of the full module.
    #[arg(long)]
    weight: Option<String>,

    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
}

#[derive(Args)]
struct StraightenArgs {
    #[command(flatten)]
    common: Common,

    #[arg(long, default_value_t = 0)]
    module: usize,

    /// Monomial such as "x1(-2) x1(-2)"; factor order is irrelevant.
    monomial: String,

    #[arg(long, value_enum, default_value_t = Algorithm::Rewriting)]
    method: Algorithm,

    /// Compare both algorithms and both sides' images under the oracle.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,

    /// Restrict the rank sweep to one module; all modules otherwise.
    #[arg(long)]
    module: Option<usize>,

    /// Rank sweep covers degrees 0..=degree.
    #[arg(long, default_value_t = 4)]
    degree: u32,

    /// Restrict the rank sweep to one color weight.
    #[arg(long)]
    weight: Option<String>,

    /// Largest total depth M in the vanishing-product identities.
    #[arg(long, default_value_t = 6)]
    cap: u32,

    /// Largest Fock degree of the test states for the identities.
    #[arg(long, default_value_t = 3)]
    fock_degree: u32,

    /// Skip the operator identities.
    #[arg(long)]
    no_relations: bool,

    /// JSON file caching sector ranks between runs.
    #[arg(long)]
    cache: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Enumerate(a) => report::enumerate(a),
        Command::Character(a) => report::character(a),
        Command::Straighten(a) => report::straighten(a),
        Command::Verify(a) => report::verify(a),
    };
    match result {
        Ok(Outcome { text, ok }) => {
            print!("{text}");
            ExitCode::from(if ok { 0 } else { 2 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
