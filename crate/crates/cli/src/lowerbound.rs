use std::io::Write;

use anyhow::{bail, Result};
use ftdiam_core::lowerbound::{build_g, build_h, quadruples, verify_dichotomy, Dichotomy, LbTensor};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::run::distance_json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorKind {
    Ones,
    Zeros,
    Random(u64),
}

impl std::str::FromStr for TensorKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ones" => Ok(TensorKind::Ones),
            "zeros" => Ok(TensorKind::Zeros),
            _ => s
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(TensorKind::Random)
                .ok_or_else(|| format!("expected ones, zeros or random:<seed>, got `{s}`")),
        }
    }
}

pub struct LowerBoundConfig {
    pub root: usize,
    pub tensor: TensorKind,
    pub sweep: bool,
    pub samples: usize,
    pub seed: u64,
}

/// Classifies quadruples and returns the number of dichotomy violations.
pub fn run(cfg: &LowerBoundConfig, out: &mut dyn Write) -> Result<usize> {
    if cfg.root == 0 {
        bail!("--sqrt-n must be positive");
    }
    let m = match cfg.tensor {
        TensorKind::Ones => LbTensor::ones(cfg.root),
        TensorKind::Zeros => LbTensor::zeros(cfg.root),
        TensorKind::Random(seed) => LbTensor::random(cfg.root, seed),
    };
    let h = build_h(cfg.root * cfg.root)?;
    let g = build_g(&h, &m)?;
    let mut quads = quadruples(cfg.root);
    if !cfg.sweep {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        quads.shuffle(&mut rng);
        quads.truncate(cfg.samples);
    }
    let (mut low, mut high, mut mixed, mut violations) = (0, 0, 0, 0);
    for (i, j, x, y) in quads {
        let mut rec = json!({ "i": i, "j": j, "x": x, "y": y });
        match verify_dichotomy(&g, &m, i, j, x, y) {
            Ok(report) => {
                rec["class"] = json!(match report.class {
                    Dichotomy::AtMost3 => {
                        low += 1;
                        "at_most_3"
                    }
                    Dichotomy::AtLeast5 => {
                        high += 1;
                        "at_least_5"
                    }
                });
                rec["diameter"] = distance_json(report.diameter);
                rec["a_to_d"] = distance_json(report.a_to_d);
            }
            Err(ftdiam_core::Error::MixedEntries) => {
                mixed += 1;
                rec["class"] = json!("mixed");
            }
            Err(ftdiam_core::Error::DichotomyViolation(msg)) => {
                violations += 1;
                rec["class"] = json!("violation");
                rec["message"] = json!(msg);
            }
            Err(e) => return Err(e.into()),
        }
        writeln!(out, "{rec}")?;
    }
    let summary = json!({
        "sqrt_n": cfg.root,
        "n": g.graph().n(),
        "m_h": h.graph().m(),
        "m_g": g.graph().m(),
        "at_most_3": low,
        "at_least_5": high,
        "mixed": mixed,
        "violations": violations,
    });
    writeln!(out, "{}", json!({ "summary": summary }))?;
    Ok(violations)
}
