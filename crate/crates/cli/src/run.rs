use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{bail, Result};
use ftdiam_core::distance::{stretch_ratio, within_stretch};
use ftdiam_core::dso::{count_calls, AllPairsDso, CountingDso, RecomputeDso, SingleSourceDso, StretchedDso};
use ftdiam_core::exact::{exact_st_diameter, ExactQuery};
use ftdiam_core::fdo::{FdoAllPairs, FdoSingleSource};
use ftdiam_core::fdo_st::{FdoSt, FdoStConfig, Regime};
use ftdiam_core::single_source::{CombineMode, FdoSourceTargets, FdoStCombined};
use ftdiam_core::{DiameterOracle, Distance, FailureSet, Graph, Result as CoreResult, Stretch, VertexId};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DsoKind {
    Exact,
    Stretched(Stretch),
}

impl DsoKind {
    pub fn label(self) -> String {
        match self {
            DsoKind::Exact => "exact".into(),
            DsoKind::Stretched(l) => format!("stretched:{l}"),
        }
    }
}

impl std::str::FromStr for DsoKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "exact" {
            return Ok(DsoKind::Exact);
        }
        match s.strip_prefix("stretched:") {
            Some(l) => ftdiam_core::distance::parse_stretch(l).map(DsoKind::Stretched).map_err(|e| e.to_string()),
            None => Err(format!("expected `exact` or `stretched:<lambda>`, got `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleKind {
    AllPairs,
    SingleSource { source: VertexId },
    St { regime: Regime, seed: u64 },
    SourceTargets { source: Option<VertexId> },
    Combined { mode: CombineMode },
    Exact,
}

impl OracleKind {
    fn label(&self) -> &'static str {
        match self {
            OracleKind::AllPairs => "thm1",
            OracleKind::SingleSource { .. } => "thm2",
            OracleKind::St { .. } => "fdo-st",
            OracleKind::SourceTargets { .. } => "sT",
            OracleKind::Combined { mode: CombineMode::BlackBox } => "lemma",
            OracleKind::Combined { mode: CombineMode::Combined } => "thm5",
            OracleKind::Exact => "exact",
        }
    }

    fn uses_sets(&self) -> bool {
        !matches!(self, OracleKind::AllPairs | OracleKind::SingleSource { .. })
    }
}

pub struct RunConfig {
    pub graph: Arc<Graph>,
    pub oracle: OracleKind,
    pub dso: DsoKind,
    pub f: usize,
    pub sources: Option<Vec<VertexId>>,
    pub targets: Option<Vec<VertexId>>,
    pub queries: Vec<FailureSet>,
    pub verify: bool,
    pub timing: bool,
}

type AllPairs = Arc<dyn AllPairsDso>;
type SingleSource = Arc<dyn SingleSourceDso>;

/// Estimate, optional exact value, DSO calls, microseconds.
type Answer = (Distance, Option<Distance>, usize, f64);

fn all_pairs(g: &Arc<Graph>, f: usize, kind: DsoKind) -> AllPairs {
    let base = RecomputeDso::new(Arc::clone(g), f);
    match kind {
        DsoKind::Exact => Arc::new(CountingDso::new(base)),
        DsoKind::Stretched(l) => Arc::new(CountingDso::new(StretchedDso::new(base, l))),
    }
}

fn single_source(g: &Arc<Graph>, f: usize, kind: DsoKind, source: VertexId, reversed: bool) -> SingleSource {
    let all = RecomputeDso::new(Arc::clone(g), f);
    let base = if reversed { all.reversed_single_source(source) } else { all.single_source(source) };
    match kind {
        DsoKind::Exact => Arc::new(CountingDso::new(base)),
        DsoKind::Stretched(l) => Arc::new(CountingDso::new(StretchedDso::new(base, l))),
    }
}

/// Brute-force answers wearing the oracle interface.
struct ExactOracle {
    graph: Arc<Graph>,
    sources: Vec<VertexId>,
    targets: Vec<VertexId>,
}

impl DiameterOracle for ExactOracle {
    fn query(&self, failures: &FailureSet) -> CoreResult<Distance> {
        exact_st_diameter(&ExactQuery {
            graph: &self.graph,
            sources: &self.sources,
            targets: &self.targets,
            failures,
        })
    }

    fn stretch(&self) -> Stretch {
        Stretch::from_integer(1)
    }

    fn sensitivity(&self) -> usize {
        usize::MAX
    }
}

struct Built {
    oracle: Box<dyn DiameterOracle>,
    sources: Vec<VertexId>,
    targets: Vec<VertexId>,
}

fn build(cfg: &RunConfig) -> Result<Built> {
    let g = &cfg.graph;
    let everyone: Vec<VertexId> = g.vertices().collect();
    let (sources, targets) = if cfg.oracle.uses_sets() {
        match (&cfg.sources, &cfg.targets) {
            (Some(s), Some(t)) => (s.clone(), t.clone()),
            (None, None) if cfg.oracle == OracleKind::Exact => (everyone.clone(), everyone.clone()),
            _ => bail!("oracle `{}` needs --s-set and --t-set", cfg.oracle.label()),
        }
    } else {
        (everyone.clone(), everyone.clone())
    };
    let (f, kind) = (cfg.f, cfg.dso);
    let oracle: Box<dyn DiameterOracle> = match &cfg.oracle {
        OracleKind::AllPairs => Box::new(FdoAllPairs::build(g, all_pairs(g, f, kind))),
        OracleKind::SingleSource { source } => {
            let out = single_source(g, f, kind, *source, false);
            let inn = single_source(g, f, kind, *source, g.is_directed());
            Box::new(FdoSingleSource::build(g, *source, out, inn)?)
        }
        OracleKind::St { regime, seed } => {
            let config = FdoStConfig {
                regime: *regime,
                seed: *seed,
            };
            Box::new(FdoSt::build(g, &sources, &targets, all_pairs(g, f, kind), config)?)
        }
        OracleKind::SourceTargets { source } => {
            let s = source.unwrap_or(sources[0]);
            let oracle = FdoSourceTargets::build(g, &targets, single_source(g, f, kind, s, false))?;
            return Ok(Built {
                oracle: Box::new(oracle),
                sources: vec![s],
                targets,
            });
        }
        OracleKind::Combined { mode } => {
            let (s, t) = ftdiam_core::single_source::default_anchors(&sources, &targets)?;
            let dso_s = single_source(g, f, kind, s, false);
            let dso_t = single_source(g, f, kind, t, false);
            Box::new(FdoStCombined::build(g, &sources, &targets, dso_s, dso_t, *mode)?)
        }
        OracleKind::Exact => Box::new(ExactOracle {
            graph: Arc::clone(g),
            sources: sources.clone(),
            targets: targets.clone(),
        }),
    };
    Ok(Built {
        oracle,
        sources,
        targets,
    })
}

pub fn distance_json(d: Distance) -> Value {
    match d.value() {
        Some(v) => json!(v),
        None => json!("inf"),
    }
}

fn percentile(sorted: &[f64], p: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let idx = ((p * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len()) - 1;
    sorted[idx]
}

fn round3(x: f64) -> f64 {
    (x * 1000.0).round() / 1000.0
}

/// Runs every query, writes one JSON line per query and a summary line, and
/// returns the number of stretch violations (always 0 without `verify`).
pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<usize> {
    let started = Instant::now();
    let built = build(cfg)?;
    let build_ms = started.elapsed().as_secs_f64() * 1e3;
    let bound = built.oracle.stretch();
    let check_exact = cfg.verify && cfg.oracle != OracleKind::Exact;

    let results: Vec<Result<Answer>> = cfg
        .queries
        .par_iter()
        .map(|fs| {
            let t0 = Instant::now();
            let (est, calls) = count_calls(|| built.oracle.query(fs));
            let micros = t0.elapsed().as_secs_f64() * 1e6;
            let exact = if check_exact {
                Some(exact_st_diameter(&ExactQuery {
                    graph: &cfg.graph,
                    sources: &built.sources,
                    targets: &built.targets,
                    failures: fs,
                })?)
            } else {
                None
            };
            Ok((est?, exact, calls, micros))
        })
        .collect();

    let mut violations = 0;
    let mut stretches = Vec::new();
    let mut times = Vec::new();
    let mut total_calls = 0;
    for (i, (fs, res)) in cfg.queries.iter().zip(results).enumerate() {
        let (est, exact, calls, micros) = res?;
        total_calls += calls;
        let failures: Vec<[VertexId; 2]> = fs.edges().iter().map(|&(_, u, v)| [u, v]).collect();
        let mut rec = json!({
            "query": i,
            "failures": failures,
            "estimate": distance_json(est),
            "dso_calls": calls,
        });
        if let Some(exact) = exact {
            rec["exact"] = distance_json(exact);
            if let Some(r) = stretch_ratio(est, exact) {
                rec["stretch"] = json!(round3(r));
                stretches.push(r);
            }
            let ok = within_stretch(est, exact, bound);
            rec["ok"] = json!(ok);
            violations += !ok as usize;
        }
        if cfg.timing {
            rec["query_us"] = json!(round3(micros));
            times.push(micros);
        }
        writeln!(out, "{rec}")?;
    }

    let mut summary = json!({
        "oracle": cfg.oracle.label(),
        "dso": cfg.dso.label(),
        "f": cfg.f,
        "n": cfg.graph.n(),
        "m": cfg.graph.m(),
        "weight_scale": cfg.graph.format().scale(),
        "queries": cfg.queries.len(),
        "stretch_bound": bound.to_string(),
        "dso_calls": total_calls,
    });
    if check_exact {
        let max = stretches.iter().copied().fold(None, |m: Option<f64>, x| Some(m.map_or(x, |m| m.max(x))));
        let mean = (!stretches.is_empty()).then(|| stretches.iter().sum::<f64>() / stretches.len() as f64);
        summary["max_stretch"] = json!(max.map(round3));
        summary["mean_stretch"] = json!(mean.map(round3));
        summary["violations"] = json!(violations);
    }
    if cfg.timing {
        times.sort_by(f64::total_cmp);
        summary["build_ms"] = json!(round3(build_ms));
        summary["query_us_p50"] = json!(round3(percentile(&times, 0.5)));
        summary["query_us_p99"] = json!(round3(percentile(&times, 0.99)));
    }
    writeln!(out, "{}", json!({ "summary": summary }))?;
    Ok(violations)
}
