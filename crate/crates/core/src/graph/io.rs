//! Edge-list files.
//!
//! ```text
//! # comment
//! n m directed={0|1} weights={int|fixed:<k>}
//! u v w
//! ```
//!
//! With `weights=fixed:<k>` every weight is a decimal with at most `k`
//! fractional digits and is stored as the integer `w * 10^k`.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WeightFormat {
    #[default]
    Int,
    /// Fixed point with this many decimal digits.
    Fixed(u32),
}

impl WeightFormat {
    /// `10^k`, the number of stored units per file unit.
    pub fn scale(self) -> u64 {
        match self {
            WeightFormat::Int => 1,
            WeightFormat::Fixed(k) => 10u64.pow(k),
        }
    }

    fn parse_weight(self, text: &str) -> Option<u64> {
        match self {
            WeightFormat::Int => text.parse().ok(),
            WeightFormat::Fixed(k) => {
                let (int, frac) = text.split_once('.').unwrap_or((text, ""));
                if frac.len() > k as usize || !frac.bytes().all(|b| b.is_ascii_digit()) {
                    return None;
                }
                let int: u64 = if int.is_empty() { 0 } else { int.parse().ok()? };
                let mut frac_units: u64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
                frac_units *= 10u64.pow(k - frac.len() as u32);
                int.checked_mul(self.scale())?.checked_add(frac_units)
            }
        }
    }
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    let text = std::fs::read_to_string(path.as_ref()).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.as_ref().display()),
    })?;
    parse_edge_list(&text)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line, message: String| Error::Parse { line, message };
    let (hline, header) = lines.next().ok_or_else(|| err(0, "missing header".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 {
        return Err(err(hline, format!("expected `n m directed=.. weights=..`, got `{header}`")));
    }
    let n: usize = fields[0].parse().map_err(|_| err(hline, format!("bad vertex count `{}`", fields[0])))?;
    let m: usize = fields[1].parse().map_err(|_| err(hline, format!("bad edge count `{}`", fields[1])))?;
    let directed = match fields[2] {
        "directed=0" => false,
        "directed=1" => true,
        other => return Err(err(hline, format!("bad directed flag `{other}`"))),
    };
    let format = match fields[3].strip_prefix("weights=") {
        Some("int") => WeightFormat::Int,
        Some(spec) => match spec.strip_prefix("fixed:").and_then(|k| k.parse::<u32>().ok()) {
            Some(k) if k <= 9 => WeightFormat::Fixed(k),
            _ => return Err(err(hline, format!("bad weight format `{}`", fields[3]))),
        },
        None => return Err(err(hline, format!("bad weight format `{}`", fields[3]))),
    };

    let mut triples = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for (line, body) in lines {
        let parts: Vec<&str> = body.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(err(line, format!("expected `u v w`, got `{body}`")));
        }
        let u: usize = parts[0].parse().map_err(|_| err(line, format!("bad vertex `{}`", parts[0])))?;
        let v: usize = parts[1].parse().map_err(|_| err(line, format!("bad vertex `{}`", parts[1])))?;
        let w = format
            .parse_weight(parts[2])
            .ok_or_else(|| err(line, format!("bad weight `{}`", parts[2])))?;
        triples.push((u, v, w));
        edge_lines.push(line);
    }
    if triples.len() != m {
        return Err(err(hline, format!("header declares {m} edges, found {}", triples.len())));
    }
    Graph::from_edges(n, directed, &triples)
        .map(|g| g.with_format(format))
        .map_err(|e| {
            // Attribute the failure to the first offending line.
            let line = first_bad_line(n, directed, &triples).map_or(hline, |i| edge_lines[i]);
            err(line, e.to_string())
        })
}

fn first_bad_line(n: usize, directed: bool, triples: &[(usize, usize, u64)]) -> Option<usize> {
    (1..=triples.len()).find(|&k| Graph::from_edges(n, directed, &triples[..k]).is_err()).map(|k| k - 1)
}
