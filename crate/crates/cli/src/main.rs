mod build;
mod output;
mod tables;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use constacode::Error;

use output::Format;

/// Irreducible constacyclic codes: construction, measurement and checks.
#[derive(Parser, Debug)]
#[command(name = "constacode", version)]
struct Cli {
    /// Emit JSON (default).
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    csv: bool,
    /// Largest number of messages one exhaustive enumeration may visit.
    #[arg(long, global = true, default_value_t = constacode::DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads for the enumeration kernels (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build C(q, n, r), its dual and Exp1..Exp3 and measure them.
    Build(build::BuildArgs),
    /// Check one theorem on one instance.
    Verify {
        #[command(subcommand)]
        which: verify::VerifyCmd,
    },
    /// Rows (n, d, d⊥) of the quadratic-residue family tables.
    Table(tables::TableArgs),
    /// Parameter listings.
    Scan {
        #[command(subcommand)]
        which: tables::ScanCmd,
    },
}

/// The instance (q, n, r) and its field.
#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: u64,
    /// λ has order r in GF(q)*; r must divide q - 1.
    #[arg(long, default_value_t = 1)]
    pub r: u64,
    /// Defining polynomial of GF(q^{κℓ}) over the prime field, ascending
    /// comma-separated coefficients; its root must be primitive.
    #[arg(long, value_delimiter = ',')]
    pub field_poly: Option<Vec<u64>>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariantArg {
    Nega,
    Prim,
}

impl From<VariantArg> for constacode::families::QrVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Nega => constacode::families::QrVariant::Negacyclic,
            VariantArg::Prim => constacode::families::QrVariant::PrimitiveLambda,
        }
    }
}

/// How a command ended, mapped onto the process exit code.
#[derive(Debug)]
pub enum Outcome {
    Pass,
    Fail,
    Budget,
}

pub enum Failure {
    Param(String),
    Budget(String),
    Inconsistent(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::InconsistentInput(_) => Failure::Inconsistent(e.to_string()),
            _ => Failure::Param(e.to_string()),
        }
    }
}

pub type CmdResult = Result<Outcome, Failure>;

pub struct Ctx {
    pub format: Format,
    pub budget: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().expect("thread pool is configured once");
    }
    let ctx = Ctx { format: if cli.csv { Format::Csv } else { Format::Json }, budget: cli.budget };
    let result = match &cli.command {
        Command::Build(a) => build::run(&ctx, a),
        Command::Verify { which } => verify::run(&ctx, which),
        Command::Table(a) => tables::run_table(&ctx, a),
        Command::Scan { which } => tables::run_scan(&ctx, which),
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Ok(Outcome::Budget) => ExitCode::from(3),
        Err(Failure::Inconsistent(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Param(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
