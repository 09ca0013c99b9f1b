use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fanocert::cli::{self, Outcome, RunSettings};

#[derive(Parser)]
#[command(name = "fanocert", version, about = "Regularity, hypertangent and degree-bound certificates for Fano cyclic covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args)]
struct Flags {
    /// Prime field F_p used for sampling (must satisfy p = 1 mod K).
    #[arg(long, global = true)]
    prime: Option<u64>,
    /// Master seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Instances for `campaign`; linear-cut trials for `certify`.
    #[arg(long, global = true)]
    trials: Option<usize>,
    #[arg(long, global = true)]
    points_off: Option<usize>,
    #[arg(long, global = true)]
    points_on: Option<usize>,
    /// Truncation order of the formal arcs.
    #[arg(long, global = true)]
    arc_order: Option<usize>,
    /// Step budget for each Groebner basis computation.
    #[arg(long, global = true)]
    gb_budget: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Zero out elapsed-time fields.
    #[arg(long, global = true)]
    no_timings: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// M, the dimension.
    dimension: u32,
    m: u32,
    l: u32,
    k: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Validate (M, m, l, K) and print both degree-bound certificates.
    Family(FamilyArgs),
    /// Print gamma_1..gamma_N for root index K and run the truncated-root self-check.
    Series {
        k: u32,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Localize an instance at a point given as a:b:...
    Localize {
        file: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Run the regularity and multiplicity checks on an instance.
    Certify {
        file: PathBuf,
        /// Check this point instead of sampling.
        #[arg(long)]
        point: Option<String>,
    },
    /// Check random instances of a family.
    Campaign(FamilyArgs),
    /// Print the ordering table, the telescoping blocks and the bounds.
    Bound(FamilyArgs),
    /// Print an instance file in canonical form.
    Parse { file: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome {
        stdout: String::new(),
        stderr: format!("error: cannot read {}: {e}\n", path.display()),
        exit_code: 2,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let f = &cli.flags;
    let settings = RunSettings {
        prime: f.prime,
        seed: f.seed,
        trials: f.trials,
        points_off: f.points_off,
        points_on: f.points_on,
        arc_order: f.arc_order,
        gb_budget: f.gb_budget,
        no_timings: f.no_timings,
    };
    let outcome = match &cli.command {
        Command::Family(a) => cli::family_command(a.dimension, a.m, a.l, a.k),
        Command::Series { k, order } => cli::series_command(*k, *order, settings.seed.unwrap_or(0)),
        Command::Localize { file, point } => {
            read(file).map_or_else(|o| o, |t| cli::localize_command(&t, point, &settings))
        }
        Command::Certify { file, point } => {
            read(file).map_or_else(|o| o, |t| cli::certify_command(&t, point.as_deref(), &settings))
        }
        Command::Campaign(a) => cli::campaign_command(a.dimension, a.m, a.l, a.k, &settings),
        Command::Bound(a) => cli::bound_command(a.dimension, a.m, a.l, a.k),
        Command::Parse { file } => read(file).map_or_else(|o| o, |t| cli::parse_command(&t)),
    };
    eprint!("{}", outcome.stderr);
    match &f.output {
        Some(path) if !outcome.stdout.is_empty() => {
            if let Err(e) = std::fs::write(path, &outcome.stdout) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        _ => print!("{}", outcome.stdout),
    }
    ExitCode::from(outcome.exit_code as u8)
}
