use c4clique::harness::{run_suite, Suite, SuiteConfig};
use c4clique::{
    clique_substitution, cycle_power, extract_auto, extract_dirac, extract_general_with,
    extract_large_alpha, extract_regular, extract_triple, find_induced_c4, max_clique_exact,
    max_independent_set_exact, parse_graph, random_c4free, serialize_graph, structure_of,
    w5_blowup, CliqueCertificate, Error, Graph, IndependentSetSource, Probability, Rational,
    SubstitutionSpec, VertexSet, DEFAULT_ORACLE_LIMIT, FORMAT_VERSION, MAX_VERTICES,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Writes a line to stdout; a closed pipe ends output quietly.
macro_rules! emit {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "c4clique",
    version,
    about = "Certified cliques in graphs without an induced 4-cycle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph in edge-list format.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Check graph properties.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Compute or extract cliques.
    #[command(subcommand)]
    Clique(CliqueCommand),
    /// Decompose a C4-free graph with independence number at most 2.
    Structure { file: PathBuf },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum GenCommand {
    /// The cycle power C_{4k+1}^k.
    CyclePower {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// 5-wheel blow-up with hub size h and cycle group sizes s1..s5.
    W5 {
        #[arg(long, value_delimiter = ',', num_args = 1)]
        sizes: Vec<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Replace each vertex of a C4-free base graph by a clique.
    Substitute {
        #[arg(long)]
        base: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1)]
        sizes: Vec<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Seeded G(n, p) with induced 4-cycles repaired away.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Probability,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Write to FILE instead of stdout.
    #[arg(short = 'o', value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Print an induced 4-cycle (exit 1) or "c4-free" (exit 0).
    C4free { file: PathBuf },
}

#[derive(Subcommand)]
enum CliqueCommand {
    /// Maximum clique by exhaustive search.
    Exact {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        oracle_limit: usize,
    },
    /// Certified clique from one of the extractors.
    Extract(ExtractArgs),
}

#[derive(Args)]
struct ExtractArgs {
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// ε in (0, 1) for large-alpha, as P/Q or a decimal.
    #[arg(long, default_value = "1/2", value_parser = parse_rational)]
    epsilon: Rational,
    /// Independent set for large-alpha; defaults to a maximum one when n is
    /// within the oracle limit, else a greedy maximal one.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    independent_set: Option<Vec<usize>>,
    /// Large-alpha variant for minimum degree at least n/2.
    #[arg(long, value_enum)]
    preset: Option<PresetArg>,
    /// Use a maximum independent set in the general extractor.
    #[arg(long)]
    exact_alpha: bool,
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    file: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Regular,
    General,
    Triple,
    LargeAlpha,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PresetArg {
    Dirac,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: Suite,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 40)]
    max_n: usize,
    /// Write the full JSON report to FILE.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    /// Evaluate only this record id and print it.
    #[arg(long)]
    instance: Option<String>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    c4clique::rational::parse(s).map_err(|e| e.to_string())
}

/// Failure classes mapped to exit codes.
enum Failure {
    /// Exit 1: a checked property does not hold.
    Violation(String),
    /// Exit 2: bad arguments or input.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuaranteeViolated(_) => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Violation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Gen(cmd) => generate(cmd),
        Command::Check(CheckCommand::C4free { file }) => {
            let g = read_graph(&file)?;
            match find_induced_c4(&g) {
                Some(c4) => {
                    emit!("{c4}");
                    Ok(ExitCode::from(1))
                }
                None => {
                    emit!("c4-free");
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::Clique(CliqueCommand::Exact { file, oracle_limit }) => {
            let g = read_graph(&file)?;
            let clique = max_clique_exact(&g, oracle_limit)?;
            print_json(&ExactClique {
                format_version: FORMAT_VERSION,
                omega: clique.len(),
                clique,
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Clique(CliqueCommand::Extract(args)) => extract(args),
        Command::Structure { file } => {
            let g = read_graph(&file)?;
            match structure_of(&g)? {
                Some(certificate) => print_json(&Versioned {
                    format_version: FORMAT_VERSION,
                    inner: certificate,
                })?,
                None => emit!("alpha>2"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => verify(args),
    }
}

fn generate(cmd: GenCommand) -> CliResult {
    let (g, out) = match cmd {
        GenCommand::CyclePower { k, out } => {
            check_order(k.saturating_mul(4).saturating_add(1))?;
            (cycle_power(k)?, out)
        }
        GenCommand::W5 { sizes, out } => {
            let sizes: [usize; 6] = sizes.try_into().map_err(|s: Vec<usize>| {
                Failure::Usage(format!("--sizes needs 6 values, got {}", s.len()))
            })?;
            check_order(sizes.iter().fold(0usize, |a, &s| a.saturating_add(s)))?;
            (w5_blowup(sizes), out)
        }
        GenCommand::Substitute { base, sizes, out } => {
            let base = read_graph(&base)?;
            check_order(sizes.iter().fold(0usize, |a, &s| a.saturating_add(s)))?;
            (
                clique_substitution(&SubstitutionSpec::new(base, sizes)?)?,
                out,
            )
        }
        GenCommand::Random { n, p, seed, out } => {
            check_order(n)?;
            (random_c4free(n, p, seed), out)
        }
    };
    let text = serialize_graph(&g);
    match out.output {
        Some(path) => std::fs::write(&path, text + "\n")
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => emit!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn check_order(n: usize) -> Result<(), Failure> {
    if n > MAX_VERTICES {
        return Err(Failure::Usage(format!(
            "{n} vertices exceeds the limit of {MAX_VERTICES}"
        )));
    }
    Ok(())
}

fn extract(args: ExtractArgs) -> CliResult {
    let g = read_graph(&args.file)?;
    let large_alpha = args.method == MethodArg::LargeAlpha;
    if !large_alpha && (args.independent_set.is_some() || args.preset.is_some()) {
        return Err(Failure::Usage(
            "--independent-set and --preset apply to --method large-alpha only".into(),
        ));
    }
    if args.exact_alpha && args.method != MethodArg::General {
        return Err(Failure::Usage(
            "--exact-alpha applies to --method general only".into(),
        ));
    }
    let cert: CliqueCertificate = match args.method {
        MethodArg::Auto => extract_auto(&g)?,
        MethodArg::Regular => extract_regular(&g)?,
        MethodArg::General => {
            let source = if args.exact_alpha {
                IndependentSetSource::Exact {
                    oracle_limit: args.oracle_limit,
                }
            } else {
                IndependentSetSource::Greedy
            };
            extract_general_with(&g, source)?
        }
        MethodArg::Triple => extract_triple(&g)?,
        MethodArg::LargeAlpha => {
            let s = match &args.independent_set {
                Some(vs) => g.vertex_set(vs)?,
                None => default_independent_set(&g, args.oracle_limit),
            };
            match args.preset {
                Some(PresetArg::Dirac) => extract_dirac(&g, &s, args.epsilon)?,
                None => extract_large_alpha(&g, &s, args.epsilon)?,
            }
        }
    };
    print_json(&Versioned {
        format_version: FORMAT_VERSION,
        inner: cert,
    })?;
    Ok(ExitCode::SUCCESS)
}

fn default_independent_set(g: &Graph, oracle_limit: usize) -> VertexSet {
    max_independent_set_exact(g, oracle_limit)
        .unwrap_or_else(|_| c4clique::greedy_maximal_independent_set(g))
}

/// Failing records printed to stdout by `verify`.
const MAX_LISTED_FAILURES: usize = 20;

fn verify(args: VerifyArgs) -> CliResult {
    let config = SuiteConfig {
        suite: args.suite,
        seed: args.seed,
        samples: args.samples,
        max_n: args.max_n,
        oracle_limit: args.oracle_limit,
        instance: args.instance.clone(),
    };
    let report = run_suite(&config);
    if let Some(path) = &args.json {
        std::fs::write(path, report.to_json() + "\n")
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some(id) = &args.instance {
        match report.records.first() {
            Some(record) => print_json(record)?,
            None if report.aggregate.skipped > 0 => {
                emit!("instance {id} is outside the suite's filter")
            }
            None => {
                return Err(Failure::Usage(format!(
                    "suite {} has no instance {id:?}",
                    args.suite
                )))
            }
        }
    }
    let agg = &report.aggregate;
    emit!(
        "{}: {}/{} passed, {} failed, {} skipped",
        report.suite,
        agg.passed,
        agg.total,
        agg.failed,
        agg.skipped
    );
    for (name, count) in &agg.counters {
        emit!("  {name}: {count}");
    }
    let failures: Vec<_> = report.records.iter().filter(|r| !r.pass).collect();
    for record in failures.iter().take(MAX_LISTED_FAILURES) {
        emit!("FAIL {}: {}", record.id, record.witness);
        emit!("  reproduce: {}", record.reproduce);
    }
    if failures.len() > MAX_LISTED_FAILURES {
        emit!(
            "... {} more failures; see --json for all",
            failures.len() - MAX_LISTED_FAILURES
        );
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct ExactClique {
    format_version: u32,
    omega: usize,
    clique: VertexSet,
}

#[derive(Serialize)]
struct Versioned<T> {
    format_version: u32,
    #[serde(flatten)]
    inner: T,
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    emit!("{text}");
    Ok(())
}
