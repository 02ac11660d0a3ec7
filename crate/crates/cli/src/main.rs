use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dtcode::bounds::BoundReport;
use dtcode::code::DEFAULT_BUDGET;
use dtcode::constructions::{
    qr_generator, self_dual_generator, worked_example_generator, QRSpec, SelfDualVariant,
};
use dtcode::search::{
    feasible_block_sizes, merge_reports, run_exhaustive, run_random, Reduction, SearchOptions,
    SearchReport, SearchSpace, Shard, CSV_HEADER, DEFAULT_CHUNK, EXHAUSTIVE_BUDGET,
};
use dtcode::{DTCode, DistanceMode, Error, FieldSpec, ToeplitzGen};

mod verify;

/// Exit status for a violated property.
const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "dtcode",
    version,
    about = "Construct, analyze and search double Toeplitz codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generator of a named construction.
    Construct(ConstructArgs),
    /// Analyze one code and print the report as JSON.
    Analyze(AnalyzeArgs),
    /// Search all or randomly chosen generators for the best minimum distance.
    Search(SearchArgs),
    /// Merge the reports of every shard of one search.
    Merge(MergeArgs),
    /// Exhaustive best distances for every feasible length, as CSV.
    Table(TableArgs),
    /// Check a structural property over many codes.
    Verify(verify::VerifyArgs),
    /// Entropy, Gilbert-Varshamov and counting bounds as JSON or CSV.
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructionName {
    /// Worked example for prime `--p` (2, 3, 5, 7, 11).
    QrExample,
    /// Residue-indicator generator over F4 for odd prime `--p`.
    Qr,
    /// Self-dual generator over F_q, q = 1 mod 4.
    SelfDual,
}

#[derive(Args, Clone, Debug)]
struct ConstructionArgs {
    #[arg(long, value_enum)]
    construction: Option<ConstructionName>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    n: Option<usize>,
    /// `scalar`, `circulant:<i>` or `negacirculant:<i>`.
    #[arg(long, default_value = "scalar")]
    variant: String,
    /// Diagonal value for `qr`, in F4 text form.
    #[arg(long, default_value = "w")]
    t: String,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    source: ConstructionArgs,
    /// Also print the Toeplitz block, one row per line.
    #[arg(long)]
    matrix: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Generator text, e.g. "q=2 n=2 t=1 a=0 b=0".
    #[arg(long, conflicts_with = "construction")]
    gen: Option<String>,
    #[command(flatten)]
    source: ConstructionArgs,
    /// Bound the distance from random messages instead of computing it exactly.
    #[arg(long, requires = "seed")]
    sampled: bool,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// Maximum number of enumerated messages.
    #[arg(long, default_value_t = DEFAULT_BUDGET as u64)]
    budget: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    q: u32,
    /// Code length 2n.
    #[arg(long)]
    len: usize,
    #[arg(long, conflicts_with = "random")]
    exhaustive: bool,
    #[arg(long, requires = "seed")]
    random: bool,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value = "scalar_and_swap")]
    reduction: Reduction,
    /// Run only shard `i` of `total`, written `i/total`.
    #[arg(long, conflicts_with = "shards")]
    shard: Option<Shard>,
    /// Split the run into this many shards and merge them.
    #[arg(long)]
    shards: Option<u64>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_CHUNK)]
    chunk: u64,
    /// Resume from and save progress to this file.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Stop after this many chunks, leaving the checkpoint behind.
    #[arg(long, requires = "checkpoint")]
    halt_after: Option<u64>,
    /// Exhaustive budget in candidate-messages.
    #[arg(long, default_value_t = EXHAUSTIVE_BUDGET as u64)]
    budget: u64,
    /// Write the JSON report here.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Append the CSV summary row here (header written for a new file).
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct MergeArgs {
    #[arg(required = true)]
    reports: Vec<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    max_len: usize,
    #[arg(long, default_value = "scalar_and_swap")]
    reduction: Reduction,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = EXHAUSTIVE_BUDGET as u64)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    q: u32,
    /// Entropy curve resolution.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Longest length for the ball-size checks.
    #[arg(long, default_value_t = 24)]
    max_len: usize,
    /// Relative distance for the counting threshold.
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long, default_value_t = 200)]
    horizon: usize,
    /// `csv` prints only the entropy curve.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

/// Failure carrying its exit status.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Failure::new(EXIT_USAGE, message)
    }

    pub fn violation(message: impl Into<String>) -> Self {
        Failure::new(EXIT_VIOLATION, message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::InvariantViolation(_) => EXIT_VIOLATION,
            _ => EXIT_USAGE,
        };
        let message = match &e {
            Error::BudgetExceeded { .. } => {
                format!("{e}; use `search --random` or `analyze --sampled` instead")
            }
            _ => e.to_string(),
        };
        Failure { code, message }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

pub type CliResult<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Analyze(a) => analyze(a),
        Command::Search(a) => search(a),
        Command::Merge(a) => merge(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify::run(a),
        Command::Bounds(a) => bounds(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn field(q: u32) -> CliResult<FieldSpec> {
    Ok(FieldSpec::new(q)?)
}

fn need<T>(x: Option<T>, flag: &str, what: &str) -> CliResult<T> {
    x.ok_or_else(|| Failure::usage(format!("{what} needs --{flag}")))
}

fn build_construction(source: &ConstructionArgs) -> CliResult<ToeplitzGen> {
    let name = need(source.construction, "construction", "a construction")?;
    let gen = match name {
        ConstructionName::QrExample => {
            worked_example_generator(need(source.p, "p", "qr-example")?)?
        }
        ConstructionName::Qr => {
            let t = FieldSpec::F4.parse(&source.t)?;
            qr_generator(QRSpec {
                p: need(source.p, "p", "qr")?,
                t,
            })?
        }
        ConstructionName::SelfDual => {
            let f = field(need(source.q, "q", "self-dual")?)?;
            let variant: SelfDualVariant = source.variant.parse()?;
            self_dual_generator(f, need(source.n, "n", "self-dual")?, variant)?
        }
    };
    Ok(gen)
}

fn emit(text: &str, output: Option<&Path>) -> CliResult {
    match output {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn construct(args: ConstructArgs) -> CliResult {
    let gen = build_construction(&args.source)?;
    println!("{gen}");
    if args.matrix {
        print!("{}", gen.matrix());
    }
    Ok(())
}

fn analyze(args: AnalyzeArgs) -> CliResult {
    let gen = match &args.gen {
        Some(text) => text.parse::<ToeplitzGen>()?,
        None => build_construction(&args.source)?,
    };
    let mode = if args.sampled {
        DistanceMode::Sampled {
            trials: args.trials,
            seed: need(args.seed, "seed", "sampled mode")?,
        }
    } else {
        DistanceMode::Exact
    };
    let report = DTCode::new(gen).analyze(mode, args.budget as u128)?;
    emit(
        &(serde_json::to_string_pretty(&report)? + "\n"),
        args.output.as_deref(),
    )
}

fn block_size(len: usize) -> CliResult<usize> {
    if len < 2 || !len.is_multiple_of(2) {
        return Err(Failure::usage(format!(
            "--len must be an even number >= 2, got {len}"
        )));
    }
    Ok(len / 2)
}

fn write_report(
    report: &SearchReport,
    format: Format,
    output: Option<&Path>,
    csv: Option<&Path>,
) -> CliResult {
    if let Some(path) = output {
        fs::write(path, report.to_json()?)?;
    }
    if let Some(path) = csv {
        let fresh = !path.exists();
        let mut f = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)?;
        if fresh {
            writeln!(f, "{CSV_HEADER}")?;
        }
        writeln!(f, "{}", report.csv_row())?;
    }
    if output.is_none() || matches!(format, Format::Csv) {
        let text = match format {
            Format::Json => report.to_json()?,
            Format::Csv => format!("{CSV_HEADER}\n{}\n", report.csv_row()),
        };
        std::io::stdout().write_all(text.as_bytes())?;
    }
    Ok(())
}

fn search(args: SearchArgs) -> CliResult {
    let f = field(args.q)?;
    let n = block_size(args.len)?;
    if args.exhaustive == args.random {
        return Err(Failure::usage(
            "choose exactly one of --exhaustive and --random",
        ));
    }
    if args.shards.is_some() && args.checkpoint.is_some() {
        return Err(Failure::usage(
            "--checkpoint works with a single shard; use --shard i/total",
        ));
    }
    let opts = SearchOptions {
        jobs: args.jobs,
        chunk: args.chunk,
        budget: args.budget as u128,
        checkpoint: args.checkpoint.clone(),
        halt_after_chunks: args.halt_after,
    };
    let run_one = |shard: Shard| -> CliResult<SearchReport> {
        if args.exhaustive {
            let space = SearchSpace::new(f, n, args.reduction, shard)?;
            Ok(run_exhaustive(&space, &opts)?)
        } else {
            let seed = need(args.seed, "seed", "random search")?;
            Ok(run_random(f, n, args.trials, seed, shard, &opts)?)
        }
    };
    let report = match (args.shard, args.shards) {
        (Some(shard), _) => run_one(shard)?,
        (None, Some(total)) => {
            let parts = (0..total)
                .map(|i| run_one(Shard::new(i, total)?))
                .collect::<CliResult<Vec<_>>>()?;
            merge_reports(&parts)?
        }
        (None, None) => run_one(Shard::WHOLE)?,
    };
    if !report.checkpoint.complete {
        eprintln!(
            "halted at {}/{}; rerun with the same flags to resume",
            report.checkpoint.position, report.checkpoint.end
        );
    }
    write_report(
        &report,
        args.format,
        args.output.as_deref(),
        args.csv.as_deref(),
    )
}

fn merge(args: MergeArgs) -> CliResult {
    let reports = args
        .reports
        .iter()
        .map(|p| {
            let text = fs::read_to_string(p)
                .map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?;
            Ok(SearchReport::from_json(&text)?)
        })
        .collect::<CliResult<Vec<_>>>()?;
    let merged = merge_reports(&reports)?;
    write_report(&merged, args.format, args.output.as_deref(), None)
}

fn table(args: TableArgs) -> CliResult {
    let f = field(args.q)?;
    let budget = args.budget as u128;
    let sizes = feasible_block_sizes(f, args.max_len, args.reduction, budget);
    if let Some(&last) = sizes.last() {
        if 2 * last + 1 < args.max_len {
            eprintln!(
                "lengths above {} exceed the exhaustive budget; use `search --random` for them",
                2 * last
            );
        }
    } else {
        return Err(Failure::new(
            EXIT_BUDGET,
            "no length within --max-len fits the exhaustive budget",
        ));
    }
    let opts = SearchOptions {
        jobs: args.jobs,
        budget,
        ..SearchOptions::default()
    };
    let mut reports = Vec::new();
    for n in sizes {
        let space = SearchSpace::new(f, n, args.reduction, Shard::WHOLE)?;
        reports.push(run_exhaustive(&space, &opts)?);
    }
    let mut out = String::new();
    match args.format {
        Format::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in &reports {
                out.push_str(&r.csv_row());
                out.push('\n');
            }
        }
        Format::Json => out = serde_json::to_string_pretty(&reports)? + "\n",
    }
    emit(&out, None)
}

fn bounds(args: BoundsArgs) -> CliResult {
    let report = BoundReport::build(args.q, args.samples, args.max_len, args.delta, args.horizon)?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Csv => {
            let mut s = String::from("x,H\n");
            for (x, h) in &report.entropy_curve {
                s.push_str(&format!("{x},{h}\n"));
            }
            s
        }
    };
    emit(&text, None)
}
