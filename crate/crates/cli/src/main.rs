//! `hygirth` command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error (the error kind is printed
//! on standard error), 2 on I/O or parse errors.

mod spec;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hygirth::bounds::BoundsReport;
use hygirth::constructions::{
    grid_hypergraph, lift_to_girth, midpoint_construction, star_partition_construction, surgery_step, LiftConfig,
};
use hygirth::girth::berge_girth;
use hygirth::hypercore::io::{parse_elg, parse_hyg, write_hyg, write_multi_hyg};
use hygirth::neg_girth::{minus_k_girth, NegGirth};
use hygirth::randmodels::{
    cayley_girth, cayley_girth_experiment, cayley_hypergraph, condition6_violation, girth_distribution_experiment,
    sample_config_model, CayleySpec, DEFAULT_CAYLEY_MAX_VERTICES,
};
use hygirth::{Error, Graph, Hypergraph};

use spec::{ExperimentSpec, Model};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "hygirth", version, about = "Linear uniform regular hypergraphs of high Berge girth")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Berge girth of a `.hyg` file and a shortest cycle.
    Girth {
        file: PathBuf,
        /// Only look for cycles shorter than this.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Build a hypergraph from parameters or a `.elg` graph.
    #[command(subcommand)]
    Construct(Construct),
    /// Raise the girth by repeated random 2-covers.
    Lift {
        file: PathBuf,
        #[arg(long)]
        girth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Covers tried per round.
        #[arg(long, default_value_t = LiftConfig::default().attempts_per_round)]
        budget: usize,
        #[command(flatten)]
        out: Output,
        /// Progress log file (default: standard error).
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Shrink by vertex-removal surgery while keeping girth at least `--girth`.
    Surgery {
        file: PathBuf,
        #[arg(long)]
        girth: usize,
        #[command(flatten)]
        out: Output,
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Moore-type and log-scale bounds.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        /// Largest girth tabulated.
        #[arg(long, default_value_t = 8)]
        g: usize,
        #[arg(long, default_value_t = 0.25)]
        c0: f64,
        #[arg(long)]
        csv: bool,
    },
    /// Sample from a random model.
    #[command(subcommand)]
    Sample(Sample),
    /// Run a Monte Carlo girth experiment from a JSON spec.
    Experiment {
        spec: PathBuf,
        /// Worker threads (default: `HYGIRTH_JOBS`, else all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Overrides the spec's `output`.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Brute-force (-k)-girth of a 3-uniform `.hyg` file.
    Neggirth {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        cap: usize,
    },
}

#[derive(Args)]
struct Output {
    /// Output file (default: standard output).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Construct {
    /// Lines of the grid `[r]^d`.
    Grid {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Edges of a cubic graph as vertices, graph vertices as edges.
    Midpoint {
        graph: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Star partition of a regular bipartite graph.
    Stars {
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum Sample {
    /// Random Cayley hypergraph on the symmetric group.
    Cayley {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report the girth without materialising the group.
        #[arg(long)]
        girth_only: bool,
        /// Girth search cap for `--girth-only`.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CAYLEY_MAX_VERTICES)]
        max_vertices: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Configuration-model multi-hypergraph.
    Config {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

/// Failure classes with their exit codes.
enum Failure {
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ParseError { .. } => Failure::Io(format!("ParseError: {e}")),
            e => Failure::Domain(e),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    let text = read(path)?;
    let file = parse_hyg(&text).map_err(|e| Failure::Io(format!("ParseError: {}: {e}", path.display())))?;
    file.into_simple().map_err(|e| Failure::Io(format!("ParseError: {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read(path)?;
    parse_elg(&text).map_err(|e| Failure::Io(format!("ParseError: {}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string())),
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_girth(file: &Path, cap: Option<usize>) -> CmdResult {
    let h = read_hypergraph(file)?;
    let res = berge_girth(&h, cap);
    let mut out = format!("girth {}\n", res.girth);
    if let Some(w) = res.witness {
        writeln!(out, "edges {}\nvertices {}", join(&w.edges), join(&w.vertices)).unwrap();
    }
    emit(None, &out)
}

fn cmd_construct(c: Construct) -> CmdResult {
    let (h, out) = match c {
        Construct::Grid { r, d, out } => (grid_hypergraph(r, d)?, out),
        Construct::Midpoint { graph, out } => (midpoint_construction(&read_graph(&graph)?)?, out),
        Construct::Stars { graph, r, s, out } => (star_partition_construction(&read_graph(&graph)?, r, s)?, out),
    };
    emit(out.output.as_deref(), &write_hyg(&h))
}

fn write_log(path: Option<&Path>, lines: &[String]) -> CmdResult {
    let text: String = lines.iter().map(|l| format!("{l}\n")).collect();
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            eprint!("{text}");
            Ok(())
        }
    }
}

fn cmd_lift(file: &Path, girth: usize, seed: u64, budget: usize, out: Output, log: Option<PathBuf>) -> CmdResult {
    let h = read_hypergraph(file)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let config = LiftConfig { attempts_per_round: budget, ..LiftConfig::default() };
    let outcome = lift_to_girth(&h, girth, &mut rng, config)?;
    let lines: Vec<String> = outcome.rounds.iter().map(ToString::to_string).collect();
    write_log(log.as_deref(), &lines)?;
    emit(out.output.as_deref(), &write_hyg(&outcome.hypergraph))
}

fn cmd_surgery(file: &Path, girth: usize, out: Output, log: Option<PathBuf>) -> CmdResult {
    let mut h = read_hypergraph(file)?;
    let mut lines = Vec::new();
    while let Some(step) = surgery_step(&h, girth)? {
        lines.push(format!("girth>={girth} removed {} vertices {}", join(&step.removed), step.hypergraph.n()));
        h = step.hypergraph;
    }
    write_log(log.as_deref(), &lines)?;
    emit(out.output.as_deref(), &write_hyg(&h))
}

fn cmd_bounds(n: usize, r: usize, d: usize, g: usize, c0: f64, csv: bool) -> CmdResult {
    let report = BoundsReport::new(n, r, d, g, c0)?;
    let text = if csv { format!("# seed=NA version={VERSION}\n{}", report.to_csv()) } else { report.to_text() };
    emit(None, &text)
}

fn spec_comment(spec: &CayleySpec, seed: u64) -> String {
    let mut out = format!("# cayley n={} r={} d={} seed={seed}\n", spec.n(), spec.r(), spec.d());
    for (i, t) in spec.taus().iter().enumerate() {
        writeln!(out, "# tau_{} {t}", i + 1).unwrap();
    }
    out
}

fn cmd_sample(s: Sample) -> CmdResult {
    match s {
        Sample::Cayley { n, r, d, seed, girth_only, cap, max_vertices, out } => {
            let spec = CayleySpec::random(n, r, d, &mut ChaCha8Rng::seed_from_u64(seed))?;
            let header = spec_comment(&spec, seed);
            if let Some((i, k, j, l)) = condition6_violation(&spec) {
                eprint!("{header}");
                return Err(Failure::Domain(Error::Condition6Violated { i, k, j, l }));
            }
            if girth_only {
                let res = cayley_girth(&spec, cap)?;
                let mut text = format!("{header}girth {}\n", res.girth);
                if let Some(w) = res.witness {
                    writeln!(text, "generators {}\npowers {}", join(&w.generators), join(&w.powers)).unwrap();
                }
                return emit(out.output.as_deref(), &text);
            }
            let h = cayley_hypergraph(&spec, max_vertices)?;
            emit(out.output.as_deref(), &format!("{header}{}", write_hyg(&h)))
        }
        Sample::Config { n, r, d, seed, out } => {
            let m = sample_config_model(n, r, d, &mut ChaCha8Rng::seed_from_u64(seed))?;
            let header = format!("# config n={n} r={r} d={d} seed={seed}\n");
            emit(out.output.as_deref(), &format!("{header}{}", write_multi_hyg(&m)))
        }
    }
}

fn jobs_default(flag: Option<usize>) -> Option<usize> {
    flag.or_else(|| std::env::var("HYGIRTH_JOBS").ok().and_then(|v| v.parse().ok()))
}

fn cmd_experiment(spec_path: &Path, jobs: Option<usize>, output: Option<PathBuf>) -> CmdResult {
    let text = read(spec_path)?;
    let spec = ExperimentSpec::parse(&text).map_err(|e| Failure::Io(format!("ParseError: {}: {e}", spec_path.display())))?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs_default(jobs) {
        pool = pool.num_threads(j);
    }
    let pool = pool.build().map_err(|e| Failure::Io(e.to_string()))?;
    let start = Instant::now();
    let table = pool.install(|| match spec.model {
        Model::Config => girth_distribution_experiment(spec.n, spec.r, spec.d, spec.g_max, spec.trials, spec.seed),
        Model::Cayley => cayley_girth_experiment(spec.n, spec.r, spec.d, spec.g_max, spec.trials, spec.seed),
    })?;
    eprintln!(
        "{} trials, {} accepted, {:.2}s",
        table.trials,
        table.trials - table.rejected,
        start.elapsed().as_secs_f64()
    );
    let header = format!("# model={} n={} r={} d={} trials={}\n", spec.model, spec.n, spec.r, spec.d, spec.trials);
    let csv = table.to_csv(VERSION);
    // keep the seed/version line first
    let (first, rest) = csv.split_once('\n').unwrap_or((&csv, ""));
    let path = output.or(spec.output.map(PathBuf::from));
    emit(path.as_deref(), &format!("{first}\n{header}{rest}"))
}

fn cmd_neggirth(file: &Path, k: usize, cap: usize) -> CmdResult {
    let h = read_hypergraph(file)?;
    let res = minus_k_girth(&h, k, cap)?;
    let mut out = format!("k {}\n", res.k);
    match res.g {
        NegGirth::Found(g) => writeln!(out, "neg_girth {g}").unwrap(),
        NegGirth::NotFound(c) => writeln!(out, "neg_girth none cap={c}").unwrap(),
    }
    if let Some(w) = res.witness {
        writeln!(out, "witness {}", join(&w)).unwrap();
    }
    emit(None, &out)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Girth { file, cap } => cmd_girth(&file, cap),
        Command::Construct(c) => cmd_construct(c),
        Command::Lift { file, girth, seed, budget, out, log } => cmd_lift(&file, girth, seed, budget, out, log),
        Command::Surgery { file, girth, out, log } => cmd_surgery(&file, girth, out, log),
        Command::Bounds { n, r, d, g, c0, csv } => cmd_bounds(n, r, d, g, c0, csv),
        Command::Sample(s) => cmd_sample(s),
        Command::Experiment { spec, jobs, output } => cmd_experiment(&spec, jobs, output),
        Command::Neggirth { file, k, cap } => cmd_neggirth(&file, k, cap),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.kind());
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
