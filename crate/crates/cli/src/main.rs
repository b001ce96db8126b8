//! `tcw`: a workbench for cyclic codes built from base-q digit-weight
//! classes: construct codes and their duals/complements, verify the
//! window lemmas, scan multipliers for the best BCH bound, compute
//! minimum distances, and replay the full built-in reference ledger.

mod commands;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tcw_core::{SearchBudget, WeightPair};

#[derive(Parser)]
#[command(
    name = "tcw",
    version,
    about = "Cyclic codes from digit-weight classes"
)]
struct Cli {
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to a file instead of stdout.
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code: length, dimension, defining set, generator.
    Construct(ConstructArgs),
    /// Closed-form window lemma / bound check for a family, or the run
    /// of an explicit multiplier.
    Bound(BoundArgs),
    /// Exhaustive multiplier scan for the best BCH window.
    DeltaMax(DeltaMaxArgs),
    /// Minimum distance (exhaustive, bounded-weight, or BCH-only).
    Distance(DistanceArgs),
    /// Replay every built-in reference value and print the ledger.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CodeSelector {
    /// Base field size (prime).
    #[arg(long, default_value_t = 3)]
    q: u32,

    /// Extension degree; the code length is q^m - 1.
    #[arg(long)]
    m: u32,

    /// Weight-class pair, e.g. "0,3".
    #[arg(long, value_parser = parse_pair)]
    pair: WeightPair,

    /// Operate on the dual code.
    #[arg(long, conflicts_with = "complement")]
    dual: bool,

    /// Operate on the complement code.
    #[arg(long)]
    complement: bool,

    /// Override the field modulus (ascending coefficients, "1,2,0,1").
    #[arg(long, value_parser = parse_modulus)]
    modulus: Option<ModulusArg>,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    selector: CodeSelector,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    selector: CodeSelector,

    /// Check this multiplier instead of the lemma's closed-form one.
    #[arg(long)]
    v: Option<u32>,
}

#[derive(Args)]
struct DeltaMaxArgs {
    #[command(flatten)]
    selector: CodeSelector,
}

#[derive(Args)]
struct DistanceArgs {
    #[command(flatten)]
    selector: CodeSelector,

    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,

    /// Largest codeword weight the bounded search will exhaust.
    #[arg(long, default_value_t = 4)]
    w_max: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// Skip the slowest entries (the m = 9 multiplier scan and the
    /// weight-4 exhaustions over GF(5)).
    #[arg(long)]
    quick: bool,

    /// Seed for the randomized instance checks.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Override the modulus of the GF(q^m) built for --q/--m.
    #[arg(long, value_parser = parse_modulus, requires = "m")]
    modulus: Option<ModulusArg>,

    #[arg(long, default_value_t = 3)]
    q: u32,

    #[arg(long)]
    m: Option<u32>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Auto,
    Exhaustive,
    Bounded,
    Bch,
}

fn parse_pair(s: &str) -> Result<WeightPair, String> {
    WeightPair::parse(s).map_err(|e| e.to_string())
}

/// Newtype so clap treats the coefficient list as one value.
#[derive(Clone)]
struct ModulusArg(Vec<u8>);

fn parse_modulus(s: &str) -> Result<ModulusArg, String> {
    tcw_core::gf::parse_coeff_list(s)
        .map(ModulusArg)
        .map_err(|e| e.to_string())
}

/// Membership-test budget, overridable through TCW_WORK_CEILING.
fn budget_from_env() -> SearchBudget {
    let mut budget = SearchBudget::default();
    if let Ok(text) = std::env::var("TCW_WORK_CEILING") {
        match text.parse::<u64>() {
            Ok(v) => budget.work_ceiling = v,
            Err(_) => eprintln!("warning: ignoring unparsable TCW_WORK_CEILING={text:?}"),
        }
    }
    budget
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }

    let budget = budget_from_env();
    let result = match &cli.command {
        Command::Construct(args) => commands::construct(args, cli.json),
        Command::Bound(args) => commands::bound(args, cli.json),
        Command::DeltaMax(args) => commands::delta_max(args, cli.json),
        Command::Distance(args) => commands::distance(args, &budget, cli.json),
        Command::Verify(args) => verify::run(args, &budget, cli.json),
    };

    match result {
        Ok(output) => {
            if let Err(e) = emit(&cli, &output.text) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if output.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, format!("{text}\n"))?;
            Ok(())
        }
    }
}

/// What a subcommand hands back: rendered output plus a failure flag
/// (used by verify to exit 1 while still printing its ledger).
pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output {
            text,
            failed: false,
        }
    }
}
