use std::io;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use disjoint_matchings::report::{self, CorpusSpec, GenerateKind, Options, Outputs};
use disjoint_matchings::{Error, ViiiReading};

#[derive(Parser)]
#[command(
    name = "dmatch",
    version,
    about = "Maximum matchings versus pairs of disjoint matchings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters, decomposition minima, saturation and skeleton order.
    Analyze(RunArgs),
    /// Run checks; exits 1 if any fails.
    Verify {
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Print graph6 lines.
    Generate {
        #[command(subcommand)]
        kind: GenerateCmd,
    },
    /// Scan bipartite graphs for M-H path ends that are not leaves.
    Conjecture(RunArgs),
}

#[derive(Subcommand)]
enum GenerateCmd {
    /// The 10-vertex graph with nu = 5 and mu = 4
    Spanner,
    /// A skeleton tree of order K; the seed picks pendant and connector lengths
    KSkeleton {
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Connected graphs on exactly N vertices, one per isomorphism class.
    AllConnected { n: usize },
    /// G(n, p) samples, `n,p,count,seed`
    Random { spec: String },
    /// Random bipartite graphs, `n,p,count,seed`
    RandomBipartite { spec: String },
}

#[derive(Args)]
#[group(id = "source", multiple = false)]
struct Source {
    /// graph6 file, one graph per line; `-` for standard input.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Every connected graph on at most N vertices.
    #[arg(long, value_name = "N")]
    all_connected: Option<usize>,
    /// G(n, p) samples
    #[arg(long, value_name = "n,p,count,seed")]
    random: Option<String>,
    /// Random bipartite graphs with parts of size n/2 and ceil(n/2)
    #[arg(long, value_name = "n,p,count,seed")]
    random_bipartite: Option<String>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Skip malformed input lines instead of aborting.
    #[arg(long)]
    keep_going: bool,
    /// Literal reading of skeleton condition (viii).
    #[arg(long)]
    strict_viii: bool,
    /// JSON lines only.
    #[arg(long)]
    json: bool,
    /// Summary only.
    #[arg(long)]
    summary: bool,
    /// Skip graphs with more edges.
    #[arg(long)]
    max_edges: Option<usize>,
    /// Seconds per graph before it is skipped.
    #[arg(long, value_name = "SECS")]
    time_limit_per_graph: Option<f64>,
    /// Add elapsedMicros to each line.
    #[arg(long)]
    timing: bool,
}

impl RunArgs {
    fn corpus(&self) -> Result<CorpusSpec, Error> {
        let s = &self.source;
        Ok(if let Some(path) = &s.input {
            CorpusSpec::File(path.clone())
        } else if let Some(n) = s.all_connected {
            CorpusSpec::AllConnected(n)
        } else if let Some(spec) = &s.random {
            CorpusSpec::parse_random(spec, false)?
        } else if let Some(spec) = &s.random_bipartite {
            CorpusSpec::parse_random(spec, true)?
        } else {
            CorpusSpec::File(PathBuf::from("-"))
        })
    }

    fn options(&self, checks: Vec<report::Check>) -> Result<Options, Error> {
        let time_limit = match self.time_limit_per_graph {
            Some(t) if !(t.is_finite() && t > 0.0) => {
                return Err(Error::InvalidParameter(format!(
                    "time limit {t} must be positive"
                )));
            }
            t => t.map(Duration::from_secs_f64),
        };
        Ok(Options {
            checks,
            jobs: self.jobs,
            reading: if self.strict_viii {
                ViiiReading::Literal
            } else {
                ViiiReading::PerfectMatching
            },
            max_edges: self.max_edges,
            time_limit,
            timing: self.timing,
        })
    }

    fn outputs(&self) -> Outputs {
        Outputs::from_flags(self.json, self.summary)
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    let mut out = io::stdout().lock();
    let mut err = io::stderr();
    match cli.command {
        Command::Analyze(a) => {
            let opts = a.options(Vec::new())?;
            report::cmd_analyze(
                &a.corpus()?,
                &opts,
                a.keep_going,
                a.outputs(),
                &mut out,
                &mut err,
            )
        }
        Command::Verify { run, checks } => {
            let opts = run.options(report::parse_checks(&checks)?)?;
            report::cmd_verify(
                &run.corpus()?,
                &opts,
                run.keep_going,
                run.outputs(),
                &mut out,
                &mut err,
            )
        }
        Command::Generate { kind } => {
            let kind = match kind {
                GenerateCmd::Spanner => GenerateKind::Spanner,
                GenerateCmd::KSkeleton { k, seed } => GenerateKind::KSkeleton { k, seed },
                GenerateCmd::AllConnected { n } => GenerateKind::AllConnected(n),
                GenerateCmd::Random { spec } => {
                    GenerateKind::Corpus(CorpusSpec::parse_random(&spec, false)?)
                }
                GenerateCmd::RandomBipartite { spec } => {
                    GenerateKind::Corpus(CorpusSpec::parse_random(&spec, true)?)
                }
            };
            report::cmd_generate(&kind, &mut out)
        }
        Command::Conjecture(a) => {
            let opts = a.options(Vec::new())?;
            report::cmd_conjecture(
                &a.corpus()?,
                &opts,
                a.keep_going,
                a.outputs(),
                &mut out,
                &mut err,
            )
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("dmatch: {e}");
            ExitCode::from(report::EXIT_USAGE as u8)
        }
    }
}
