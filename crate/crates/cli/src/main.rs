mod lowerbound;
mod queries;
mod run;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ftdiam_core::fdo_st::Regime;
use ftdiam_core::graph::read_edge_list;
use ftdiam_core::single_source::CombineMode;
use ftdiam_core::VertexId;

use lowerbound::{LowerBoundConfig, TensorKind};
use queries::QuerySource;
use run::{DsoKind, OracleKind, RunConfig};

/// Fault-tolerant diameter oracles: build, query, and check against brute force.
#[derive(Parser)]
#[command(name = "ftdiam", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run any oracle selected by name.
    Bench {
        #[arg(long, value_enum)]
        oracle: OracleName,
        /// Source vertex for thm2 and sT (default: 0 for thm2, min of S for sT).
        #[arg(long)]
        source: Option<VertexId>,
        #[arg(long, value_enum, default_value_t = RegimeArg::Auto)]
        regime: RegimeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Diameter oracle from an all-pairs (`thm1`) or single-source (`thm2`) DSO.
    Fdo {
        #[arg(long, value_enum, default_value_t = Reduction::AllPairs)]
        reduction: Reduction,
        #[arg(long, default_value_t = 0)]
        source: VertexId,
        #[command(flatten)]
        common: Common,
    },
    /// ST-diameter oracle from an all-pairs DSO.
    FdoSt {
        #[arg(long, value_enum, default_value_t = RegimeArg::Auto)]
        regime: RegimeArg,
        /// Seed of the pivot sampler.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// ST-diameter oracles from single-source DSOs.
    FdoStSs {
        #[arg(long, value_enum, default_value_t = SsMode::Combined)]
        mode: SsMode,
        /// Source of the sT oracle (default: min of S).
        #[arg(long)]
        source: Option<VertexId>,
        #[command(flatten)]
        common: Common,
    },
    /// Brute-force (ST-)diameter of G - F.
    Exact {
        #[command(flatten)]
        common: Common,
    },
    /// Classify failure quadruples of the lower-bound graph.
    Lowerbound {
        #[arg(long = "sqrt-n")]
        sqrt_n: usize,
        #[arg(long, default_value = "ones")]
        tensor: TensorKind,
        /// Every valid quadruple instead of a sample.
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    graph: PathBuf,
    /// `exact` or `stretched:<lambda>`.
    #[arg(long, default_value = "exact")]
    dso: DsoKind,
    /// Sensitivity.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    f: u64,
    #[arg(long = "s-set")]
    s_set: Option<PathBuf>,
    #[arg(long = "t-set")]
    t_set: Option<PathBuf>,
    /// A query file or `random:<count>:<seed>`.
    #[arg(long, default_value = "random:100:0")]
    queries: QuerySource,
    /// Compare every answer with brute force and fail on a stretch violation.
    #[arg(long)]
    verify: bool,
    /// Report wall-clock times (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleName {
    #[value(name = "thm1")]
    AllPairs,
    #[value(name = "thm2")]
    SingleSource,
    FdoSt,
    #[value(name = "sT")]
    SourceTargets,
    #[value(name = "lemma")]
    BlackBox,
    #[value(name = "thm5")]
    Combined,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reduction {
    #[value(name = "thm1")]
    AllPairs,
    #[value(name = "thm2")]
    SingleSource,
}

#[derive(Clone, Copy, ValueEnum)]
enum SsMode {
    #[value(name = "sT")]
    SourceTargets,
    #[value(name = "lemma")]
    BlackBox,
    #[value(name = "thm5")]
    Combined,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeArg {
    Full,
    Compressed,
    Auto,
}

impl From<RegimeArg> for Regime {
    fn from(r: RegimeArg) -> Regime {
        match r {
            RegimeArg::Full => Regime::Full,
            RegimeArg::Compressed => Regime::Compressed,
            RegimeArg::Auto => Regime::Auto,
        }
    }
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(std::io::stdout().lock())),
    })
}

fn run_oracle(oracle: OracleKind, common: Common) -> Result<usize> {
    let graph = Arc::new(read_edge_list(&common.graph).with_context(|| format!("loading {}", common.graph.display()))?);
    let f = common.f as usize;
    let sources = common.s_set.as_deref().map(|p| queries::read_vertex_set(p, &graph)).transpose()?;
    let targets = common.t_set.as_deref().map(|p| queries::read_vertex_set(p, &graph)).transpose()?;
    let queries = queries::load(&common.queries, &graph, f)?;
    let cfg = RunConfig {
        graph,
        oracle,
        dso: common.dso,
        f,
        sources,
        targets,
        queries,
        verify: common.verify,
        timing: common.timing,
    };
    let mut out = open_out(&common.out)?;
    let violations = run::run(&cfg, &mut out)?;
    out.flush()?;
    Ok(violations)
}

fn dispatch(cli: Cli) -> Result<usize> {
    match cli.command {
        Command::Bench {
            oracle,
            source,
            regime,
            seed,
            common,
        } => {
            let kind = match oracle {
                OracleName::AllPairs => OracleKind::AllPairs,
                OracleName::SingleSource => OracleKind::SingleSource {
                    source: source.unwrap_or(0),
                },
                OracleName::FdoSt => OracleKind::St {
                    regime: regime.into(),
                    seed,
                },
                OracleName::SourceTargets => OracleKind::SourceTargets { source },
                OracleName::BlackBox => OracleKind::Combined {
                    mode: CombineMode::BlackBox,
                },
                OracleName::Combined => OracleKind::Combined {
                    mode: CombineMode::Combined,
                },
                OracleName::Exact => OracleKind::Exact,
            };
            run_oracle(kind, common)
        }
        Command::Fdo {
            reduction,
            source,
            common,
        } => {
            let kind = match reduction {
                Reduction::AllPairs => OracleKind::AllPairs,
                Reduction::SingleSource => OracleKind::SingleSource { source },
            };
            run_oracle(kind, common)
        }
        Command::FdoSt { regime, seed, common } => run_oracle(
            OracleKind::St {
                regime: regime.into(),
                seed,
            },
            common,
        ),
        Command::FdoStSs { mode, source, common } => {
            let kind = match mode {
                SsMode::SourceTargets => OracleKind::SourceTargets { source },
                SsMode::BlackBox => OracleKind::Combined {
                    mode: CombineMode::BlackBox,
                },
                SsMode::Combined => OracleKind::Combined {
                    mode: CombineMode::Combined,
                },
            };
            run_oracle(kind, common)
        }
        Command::Exact { common } => run_oracle(OracleKind::Exact, common),
        Command::Lowerbound {
            sqrt_n,
            tensor,
            sweep,
            samples,
            seed,
            out,
        } => {
            let cfg = LowerBoundConfig {
                root: sqrt_n,
                tensor,
                sweep,
                samples,
                seed,
            };
            let mut w = open_out(&out)?;
            let violations = lowerbound::run(&cfg, &mut w)?;
            w.flush()?;
            Ok(violations)
        }
    }
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("FTDIAM_THREADS") {
        let n: usize = v.parse().with_context(|| format!("FTDIAM_THREADS=`{v}` is not a number"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match init_threads().and_then(|()| dispatch(cli)) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(v) => {
            eprintln!("error: {v} stretch or dichotomy violation(s)");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
