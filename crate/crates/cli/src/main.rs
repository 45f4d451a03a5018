mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_SEED: u64 = 42;

fn long_version() -> &'static str {
    concat!(env!("CARGO_PKG_VERSION"), " (goodpairs library ", env!("CARGO_PKG_VERSION"), ", output schema 1)")
}

#[derive(Parser)]
#[command(name = "goodpairs", version, long_version = long_version(), about = "Good and bad pairs in Weyl groups and Schubert cell equations")]
struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "GOODPAIRS_JOBS", default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single pair.
    #[command(subcommand)]
    Pair(PairCommand),
    /// Enumerate pairs of S_n.
    #[command(subcommand)]
    Pairs(PairsCommand),
    /// Pattern characterization of bad pairs.
    #[command(subcommand)]
    Patterns(PatternsCommand),
    /// Minimal generating root subsystems.
    #[command(subcommand)]
    Mings(MingsCommand),
    /// Equations cutting out a Schubert cell fiber.
    #[command(subcommand)]
    Equations(EquationsCommand),
    /// Additional-equation scan over bad pairs.
    #[command(subcommand)]
    Counterexample(CounterexampleCommand),
    /// Check an explicit witness point.
    #[command(subcommand)]
    Witness(WitnessCommand),
    /// Random points of a Schubert cell.
    #[command(subcommand)]
    Sample(SampleCommand),
}

#[derive(Subcommand)]
enum PairCommand {
    Classify(ClassifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CriterionArg {
    Chain,
    Parabolic,
    Orbit,
    Flatten,
    All,
}

#[derive(Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub w1: String,
    #[arg(long)]
    pub w2: String,
    #[arg(long, value_enum, default_value = "all")]
    pub criteria: CriterionArg,
}

#[derive(Subcommand)]
enum PairsCommand {
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FilterArg {
    Good,
    Bad,
    All,
}

#[derive(Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "bad")]
    pub filter: FilterArg,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Allow n = 7.
    #[arg(long)]
    pub large: bool,
}

#[derive(Subcommand)]
enum PatternsCommand {
    /// Check the pattern characterization of bad pairs for every w in S_n.
    Verify(PatternsVerifyArgs),
    Query(PatternsQueryArgs),
}

#[derive(Args)]
pub struct PatternsVerifyArgs {
    #[arg(long)]
    pub n: usize,
    /// Allow n = 7.
    #[arg(long)]
    pub large: bool,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Args)]
pub struct PatternsQueryArgs {
    #[arg(long)]
    pub w: String,
    #[arg(long, value_enum, default_value = "left")]
    pub side: SideArg,
}

#[derive(Subcommand)]
enum MingsCommand {
    Show(MingsArgs),
}

#[derive(Args)]
pub struct MingsArgs {
    /// Type A degree, used with --w.
    #[arg(long, requires = "w")]
    pub n: Option<usize>,
    /// One-line notation.
    #[arg(long, conflicts_with_all = ["system", "word"])]
    pub w: Option<String>,
    /// Finite type such as B3 or G2, used with --word.
    #[arg(long, requires = "word")]
    pub system: Option<String>,
    /// Simple reflection indices (1-based), comma separated.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub word: Option<Vec<usize>>,
}

#[derive(Subcommand)]
enum EquationsCommand {
    Emit(EmitArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
}

#[derive(Args)]
pub struct EmitArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub w: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
}

#[derive(Subcommand)]
enum CounterexampleCommand {
    /// Scan every bad pair of S_n.
    Scan(ScanArgs),
}

#[derive(Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum WitnessCommand {
    Verify(WitnessArgs),
}

#[derive(Args)]
pub struct WitnessArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub w: String,
    #[arg(long)]
    pub wprime: String,
    /// Defaults to the first orbit-separated hit.
    #[arg(long, requires = "b")]
    pub a: Option<u8>,
    #[arg(long, requires = "a")]
    pub b: Option<u8>,
}

#[derive(Subcommand)]
enum SampleCommand {
    /// Evaluate every equation family of w at seeded random points.
    Check(SampleArgs),
}

#[derive(Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub w: String,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    let result = match cli.command {
        Command::Pair(PairCommand::Classify(a)) => commands::classify(a),
        Command::Pairs(PairsCommand::Enumerate(a)) => commands::enumerate(a),
        Command::Patterns(PatternsCommand::Verify(a)) => commands::patterns_verify(a),
        Command::Patterns(PatternsCommand::Query(a)) => commands::patterns_query(a),
        Command::Mings(MingsCommand::Show(a)) => commands::mings_show(a),
        Command::Equations(EquationsCommand::Emit(a)) => commands::equations_emit(a),
        Command::Counterexample(CounterexampleCommand::Scan(a)) => commands::counterexample_scan(a),
        Command::Witness(WitnessCommand::Verify(a)) => commands::witness_verify(a),
        Command::Sample(SampleCommand::Check(a)) => commands::sample_check(a),
    };
    match result {
        Ok(commands::Outcome::Success) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
