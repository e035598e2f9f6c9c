use std::path::PathBuf;
use std::process::ExitCode;

use altring_core::scan::{DEFAULT_BUDGET, DEFAULT_SEED};
use altring_core::{AlgebraError, ScanConfig};
use clap::{Args, Parser, Subcommand};

mod commands;
mod render;
mod workspace;

use commands::{BranchArg, Kind, MapArgs, Outcome};
use workspace::{Config, Format, Workspace};

/// Exact analysis of finite-dimensional nonassociative rings given by
/// structure constants, and verification of Lie multiplicative map splittings.
#[derive(Parser)]
#[command(name = "altring", version)]
struct Cli {
    /// Evaluation budget for exhaustive scans; larger quantifier spaces are sampled
    #[arg(long, global = true, env = "ALTRING_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Seed for sampled scans
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct MapOpts {
    #[arg(long)]
    source: PathBuf,
    #[arg(long)]
    target: PathBuf,
    #[arg(long)]
    map: PathBuf,
    /// Comma-separated coordinates of e1 in the source basis
    #[arg(long)]
    idempotent: String,
    /// Force a branch instead of detecting it
    #[arg(long, value_enum)]
    branch: Option<BranchArg>,
}

impl MapOpts {
    fn args(&self) -> MapArgs<'_> {
        MapArgs {
            source: &self.source,
            target: &self.target,
            map: &self.map,
            idempotent: &self.idempotent,
            branch: self.branch,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit a ring file for a built-in family
    Gen {
        #[arg(value_enum)]
        kind: Kind,
        /// A prime p or Q
        #[arg(long)]
        field: Option<String>,
        /// The two summands, for direct-sum
        rings: Vec<PathBuf>,
    },
    /// Identity checks, centre, nucleus, idempotent census and primeness
    Analyze { ring: PathBuf },
    /// List every idempotent
    Idempotents { ring: PathBuf },
    /// Peirce decomposition and its multiplication relations
    Peirce {
        ring: PathBuf,
        #[arg(long)]
        idempotent: String,
    },
    /// Frame hypotheses, diagonal centralizers and cell centres
    CheckConditions {
        ring: PathBuf,
        #[arg(long)]
        idempotent: String,
    },
    /// Split a map into psi + tau and certify both parts
    Decompose(MapOpts),
    /// Run every stage from the entry checks to the certified splitting
    VerifyTheorem(MapOpts),
}

fn emit(out: Option<&PathBuf>, body: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn render(outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&outcome.json).expect("json renders")),
        Format::Text => outcome.text.clone(),
    }
}

fn run(cli: &Cli) -> Result<(String, bool), AlgebraError> {
    let config = Config { scan: ScanConfig { budget: cli.budget, seed: cli.seed }, format: cli.format };
    let mut ws = Workspace::new(config);
    let outcome = match &cli.command {
        Command::Gen { kind, field, rings } => {
            let ring = commands::gen(&mut ws, *kind, field.as_deref(), rings)?;
            return Ok((format!("{}\n", commands::ring_json(&ring)), true));
        }
        Command::Analyze { ring } => commands::analyze(&mut ws, ring)?,
        Command::Idempotents { ring } => commands::list_idempotents(&mut ws, ring)?,
        Command::Peirce { ring, idempotent } => commands::peirce(&mut ws, ring, idempotent)?,
        Command::CheckConditions { ring, idempotent } => commands::check_conditions(&mut ws, ring, idempotent)?,
        Command::Decompose(m) => commands::run_decompose(&mut ws, &m.args())?,
        Command::VerifyTheorem(m) => commands::run_verify_theorem(&mut ws, &m.args())?,
    };
    Ok((render(&outcome, ws.config.format), outcome.pass))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (body, code) = match run(&cli) {
        Ok((body, pass)) => (body, if pass { 0 } else { 1 }),
        Err(e) => {
            let code = commands::exit_code(&e);
            eprintln!("error: {e}");
            if code != 1 {
                return ExitCode::from(code);
            }
            let doc = commands::failure_json(&e);
            let body = match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&doc).expect("json renders")),
                Format::Text => format!("FAILED: {e}\n{}\n", doc.get("witness").map(|w| w.to_string()).unwrap_or_default()),
            };
            (body, code)
        }
    };
    if let Err(e) = emit(cli.out.as_ref(), &body) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
