//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use ftdiam_core::distance::within_stretch;
use ftdiam_core::dso::{count_calls, AllPairsDso, CountingDso, RecomputeDso, SingleSourceDso, StretchedDso};
use ftdiam_core::exact::{exact_diameter, exact_distances, exact_st_diameter, ExactQuery};
use ftdiam_core::fdo::{FdoAllPairs, FdoSingleSource};
use ftdiam_core::fdo_st::{select_leaves, FdoSt, FdoStConfig, Marks, Regime};
use ftdiam_core::generate::{random_connected, random_subset};
use ftdiam_core::graph::{shortest_paths_from, ShortestPathTree};
use ftdiam_core::lowerbound::{build_g, build_h, quadruples, verify_dichotomy, Dichotomy, LbTensor};
use ftdiam_core::single_source::{CombineMode, FdoSourceTargets, FdoStCombined};
use ftdiam_core::{DiameterOracle, Distance, EdgeId, FailureSet, Graph, Stretch, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const GRAPHS: u64 = 50;
const QUERIES_PER_GRAPH: usize = 200;
const SIGMAS: [u64; 2] = [1, 2];
const SELECTION_TREES: u64 = 100;
const DICHOTOMY_SAMPLES: usize = 50;

type Outcome = Result<String, String>;

#[derive(Default)]
struct Tally {
    queries: usize,
    finite: usize,
    checks: usize,
    stretch_violations: Vec<String>,
    regime_mismatches: Vec<String>,
    regime_checks: usize,
    auto_domain: usize,
    budget_violations: Vec<String>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.queries += other.queries;
        self.finite += other.finite;
        self.checks += other.checks;
        self.stretch_violations.extend(other.stretch_violations);
        self.regime_mismatches.extend(other.regime_mismatches);
        self.regime_checks += other.regime_checks;
        self.auto_domain += other.auto_domain;
        self.budget_violations.extend(other.budget_violations);
        self
    }
}

fn suite_graph(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0000 + seed);
    let n = rng.gen_range(10..=60);
    let m = rng.gen_range(n - 1..=3 * n);
    let w = rng.gen_range(1..=5);
    random_connected(n, m, w, seed)
}

type Ap = Arc<dyn AllPairsDso>;
type Ss = Arc<dyn SingleSourceDso>;

fn ap(g: &Arc<Graph>, f: usize, sigma: u64) -> Ap {
    let base = RecomputeDso::new(Arc::clone(g), f);
    if sigma == 1 {
        Arc::new(CountingDso::new(base))
    } else {
        Arc::new(CountingDso::new(StretchedDso::new(base, Stretch::from_integer(sigma))))
    }
}

fn ss(g: &Arc<Graph>, f: usize, sigma: u64, root: VertexId) -> Ss {
    let base = RecomputeDso::new(Arc::clone(g), f).single_source(root);
    if sigma == 1 {
        Arc::new(CountingDso::new(base))
    } else {
        Arc::new(CountingDso::new(StretchedDso::new(base, Stretch::from_integer(sigma))))
    }
}

/// Suites 1, 2 and 5 share one pass over the workload.
fn run_suite(seed: u64) -> Tally {
    let g = Arc::new(suite_graph(seed));
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED);
    let sources = random_subset(n, rng.gen_range(1..=5), rng.gen());
    let targets = random_subset(n, rng.gen_range(1..=5), rng.gen());
    let (s, t) = (sources[0], targets[0]);
    let mut tally = Tally::default();

    for f in 1..=3usize {
        let count = QUERIES_PER_GRAPH / 3 + usize::from(f <= QUERIES_PER_GRAPH % 3);
        let queries: Vec<FailureSet> = (0..count)
            .map(|_| FailureSet::new(&g, rand::seq::index::sample(&mut rng, g.m(), f).into_vec()).unwrap())
            .collect();
        let truths: Vec<(Distance, Distance, Distance)> = queries
            .iter()
            .map(|fs| {
                let all = exact_diameter(&g, fs);
                let st = exact_st_diameter(&ExactQuery { graph: &g, sources: &sources, targets: &targets, failures: fs }).unwrap();
                let st_single = exact_distances(&g, s, fs).iter().enumerate().filter(|(v, _)| targets.contains(v)).map(|(_, &d)| d).max().unwrap();
                (all, st, st_single)
            })
            .collect();
        tally.queries += queries.len();
        tally.finite += truths.iter().filter(|t| t.0.is_finite()).count();
        let in_auto = Regime::Auto.resolve(n, f) == Regime::Compressed;

        for sigma in SIGMAS {
            let thm1 = FdoAllPairs::build(&g, ap(&g, f, sigma));
            let thm2 = FdoSingleSource::build(&g, 0, ss(&g, f, sigma, 0), ss(&g, f, sigma, 0)).unwrap();
            let full = FdoSt::build(&g, &sources, &targets, ap(&g, f, sigma), FdoStConfig { regime: Regime::Full, seed }).unwrap();
            let comp = FdoSt::build(&g, &sources, &targets, ap(&g, f, sigma), FdoStConfig { regime: Regime::Compressed, seed }).unwrap();
            let thm4 = FdoSourceTargets::build(&g, &targets, ss(&g, f, sigma, s)).unwrap();
            let black_box = FdoStCombined::build(&g, &sources, &targets, ss(&g, f, sigma, s), ss(&g, f, sigma, t), CombineMode::BlackBox).unwrap();
            let thm5 = FdoStCombined::build(&g, &sources, &targets, ss(&g, f, sigma, s), ss(&g, f, sigma, t), CombineMode::Combined).unwrap();

            for (fs, &(all, st, st_single)) in queries.iter().zip(&truths) {
                let k = fs.len();
                let mut check = |name: &str, o: &dyn DiameterOracle, truth: Distance, budget: Option<usize>| {
                    let (est, calls) = count_calls(|| o.query(fs).unwrap());
                    tally.checks += 1;
                    if !within_stretch(est, truth, o.stretch()) {
                        tally.stretch_violations.push(format!("graph {seed} {name} σ={sigma} F={:?}: {est} vs {truth}", fs.endpoints()));
                    }
                    if let Some(b) = budget {
                        if calls > b {
                            tally.budget_violations.push(format!("graph {seed} {name} |F|={k}: {calls} calls > {b}"));
                        }
                    }
                    est
                };
                check("thm1", &thm1, all, Some(4 * k * k));
                check("thm2", &thm2, all, Some(4 * k));
                let a = check("fdo-st/full", &full, st, Some(4 * k * k));
                let b = check("fdo-st/compressed", &comp, st, Some(4 * k * k));
                check("sT", &thm4, st_single, Some(k + 1));
                check("lemma", &black_box, st, None);
                check("thm5", &thm5, st, None);

                tally.regime_checks += 1;
                tally.auto_domain += in_auto as usize;
                let same = a == b
                    && full.compute_s_prime(fs) == comp.compute_s_prime(fs)
                    && full.compute_t_prime(fs) == comp.compute_t_prime(fs);
                if !same {
                    tally.regime_mismatches.push(format!("graph {seed} f={f} σ={sigma} F={:?}", fs.endpoints()));
                }
            }
        }
    }
    tally
}

fn verdict(problems: &[String], ok: String) -> Outcome {
    if problems.is_empty() {
        Ok(ok)
    } else {
        Err(format!("{} problem(s), first: {}", problems.len(), problems[0]))
    }
}

fn reaches(tree: &ShortestPathTree, x: VertexId, cut: &[EdgeId]) -> bool {
    tree.path_to_root(x).iter().all(|&v| tree.parent_edge(v).is_none_or(|e| !cut.contains(&e)))
}

fn subsets_upto(items: &[EdgeId], k: usize, prefix: &mut Vec<EdgeId>, visit: &mut dyn FnMut(&[EdgeId])) {
    visit(prefix);
    if prefix.len() == k {
        return;
    }
    for (i, &e) in items.iter().enumerate() {
        prefix.push(e);
        subsets_upto(&items[i + 1..], k, prefix, visit);
        prefix.pop();
    }
}

fn leaf_selection() -> Outcome {
    let mut problems = Vec::new();
    let mut failure_sets = 0usize;
    for seed in 0..SELECTION_TREES {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1EAF + seed);
        let n = rng.gen_range(2..=26);
        let f = rng.gen_range(1..=3);
        let g = random_connected(n, n - 1, 1, seed);
        let root = rng.gen_range(0..n);
        let tree = shortest_paths_from(&g, root, &FailureSet::empty());
        let density = rng.gen_range(0.1..0.9);
        let marked: Vec<bool> = (0..n).map(|_| rng.gen_bool(density)).collect();
        let marks = Marks::new(&tree, marked.clone());
        let leaves = select_leaves(&tree, &marks, f);
        if leaves.len() > 1 << f {
            problems.push(format!("tree {seed}: {} leaves > 2^{f}", leaves.len()));
        }
        if leaves.iter().any(|&l| !marked[l]) {
            problems.push(format!("tree {seed}: unmarked leaf selected"));
        }
        let tree_edges: Vec<EdgeId> = (0..n).filter_map(|v| tree.parent_edge(v)).collect();
        subsets_upto(&tree_edges, f, &mut Vec::new(), &mut |cut| {
            failure_sets += 1;
            let any_marked = (0..n).any(|x| marked[x] && reaches(&tree, x, cut));
            let any_leaf = leaves.iter().any(|&x| reaches(&tree, x, cut));
            if any_marked != any_leaf {
                problems.push(format!("tree {seed}: cut {cut:?} breaks equivalence"));
            }
        });
    }
    verdict(&problems, format!("{SELECTION_TREES} trees, {failure_sets} failure sets, 0 violations"))
}

fn dichotomy() -> Outcome {
    let mut problems = Vec::new();
    let mut checked = 0;
    let h2 = build_h(4).map_err(|e| e.to_string())?;
    for tensor in [LbTensor::ones(2), LbTensor::zeros(2)] {
        let g = build_g(&h2, &tensor).map_err(|e| e.to_string())?;
        let expect = if tensor.get(1, 1, 1) { Dichotomy::AtMost3 } else { Dichotomy::AtLeast5 };
        for (i, j, x, y) in quadruples(2) {
            checked += 1;
            match verify_dichotomy(&g, &tensor, i, j, x, y) {
                Ok(r) if r.class == expect => {}
                other => problems.push(format!("√N=2 ({i},{j},{x},{y}): {other:?}")),
            }
        }
    }
    let h3 = build_h(9).map_err(|e| e.to_string())?;
    let all = quadruples(3);
    let mut rng = ChaCha8Rng::seed_from_u64(0xD1C0);
    for sample in 0..DICHOTOMY_SAMPLES {
        let (i, j, x, y) = all[rng.gen_range(0..all.len())];
        let mut m = LbTensor::random(3, 1000 + sample as u64);
        let v = m.get(i, j, y);
        m.set(i, x, y, v);
        let g = build_g(&h3, &m).map_err(|e| e.to_string())?;
        let expect = if v { Dichotomy::AtMost3 } else { Dichotomy::AtLeast5 };
        checked += 1;
        match verify_dichotomy(&g, &m, i, j, x, y) {
            Ok(r) if r.class == expect => {}
            other => problems.push(format!("√N=3 ({i},{j},{x},{y}): {other:?}")),
        }
    }
    for big in [4, 9, 16] {
        let h = build_h(big).map_err(|e| e.to_string())?;
        let d = exact_diameter(h.graph(), &FailureSet::empty());
        checked += 1;
        if d > Distance::finite(3) {
            problems.push(format!("diam(H) = {d} at N = {big}"));
        }
    }
    verdict(&problems, format!("{checked} checks, 0 violations"))
}

fn cli_value(args: &[&str], dir: &Path) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ftdiam"))
        .args(args)
        .current_dir(dir)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} failed: {}", String::from_utf8_lossy(&out.stderr)));
    }
    let text = String::from_utf8_lossy(&out.stdout);
    let first = text.lines().next().ok_or("no output")?;
    let rec: serde_json::Value = serde_json::from_str(first).map_err(|e| e.to_string())?;
    Ok(rec["estimate"].to_string())
}

fn worked_examples() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let p = dir.path();
    let write = |name: &str, body: &str| std::fs::write(p.join(name), body).map_err(|e| e.to_string());
    write("c4.txt", "4 4 directed=0 weights=int\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n")?;
    write("f03.txt", "0-3\n")?;
    write("f12.txt", "1-2\n")?;
    write("s.txt", "0\n")?;
    write("t.txt", "2\n")?;
    let common = ["--graph", "c4.txt", "--s-set", "s.txt", "--t-set", "t.txt"];
    let cases: [(&str, Vec<&str>, &str); 5] = [
        ("thm1", vec!["fdo", "--reduction", "thm1", "--queries", "f03.txt"], "5"),
        ("thm2", vec!["fdo", "--reduction", "thm2", "--source", "0", "--queries", "f03.txt"], "10"),
        ("fdo-st", vec!["fdo-st", "--regime", "full", "--queries", "f12.txt"], "5"),
        ("sT", vec!["fdo-st-ss", "--mode", "sT", "--source", "0", "--queries", "f12.txt"], "4"),
        ("thm5", vec!["fdo-st-ss", "--mode", "thm5", "--queries", "f12.txt"], "11"),
    ];
    let mut problems = Vec::new();
    let mut seen = Vec::new();
    for (name, mut args, expect) in cases {
        args.extend(common);
        let got = cli_value(&args, p)?;
        if got != expect {
            problems.push(format!("{name}: expected {expect}, got {got}"));
        }
        seen.push(format!("{name}={got}"));
    }
    verdict(&problems, seen.join(" "))
}

fn report(index: usize, name: &str, started: Instant, outcome: &Outcome) {
    let secs = started.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => println!("PASS {index} {name}: {detail} ({secs:.1}s)"),
        Err(detail) => println!("FAIL {index} {name}: {detail} ({secs:.1}s)"),
    }
}

fn main() {
    let mut failed = 0;

    let started = Instant::now();
    let tally = (0..GRAPHS).into_par_iter().map(run_suite).reduce(Tally::default, Tally::merge);
    let sandwich = verdict(
        &tally.stretch_violations,
        format!(
            "{GRAPHS} graphs, {} failure sets ({} leave G - F connected), {} oracle answers, σ ∈ {SIGMAS:?}, 0 violations",
            tally.queries, tally.finite, tally.checks
        ),
    );
    report(1, "sandwich suites", started, &sandwich);
    let regimes = verdict(
        &tally.regime_mismatches,
        format!(
            "{} queries compared ({} inside the auto-compressed range), 0 mismatches",
            tally.regime_checks, tally.auto_domain
        ),
    );
    report(2, "regime equivalence", started, &regimes);
    failed += sandwich.is_err() as usize + regimes.is_err() as usize;

    let started = Instant::now();
    let selection = leaf_selection();
    report(3, "leaf-selection contract", started, &selection);
    failed += selection.is_err() as usize;

    let started = Instant::now();
    let lb = dichotomy();
    report(4, "lower-bound dichotomy", started, &lb);
    failed += lb.is_err() as usize;

    let started = Instant::now();
    let budgets = verdict(&tally.budget_violations, format!("{} answers within call budgets", tally.checks));
    report(5, "DSO-call budgets", started, &budgets);
    failed += budgets.is_err() as usize;

    let started = Instant::now();
    let worked = worked_examples();
    report(6, "CLI worked examples", started, &worked);
    failed += worked.is_err() as usize;

    if failed > 0 {
        println!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
}
