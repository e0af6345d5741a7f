use std::path::Path;

use anyhow::{bail, Context, Result};
use ftdiam_core::{FailureSet, Graph, VertexId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Where failure sets come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuerySource {
    File(String),
    Random { count: usize, seed: u64 },
}

impl std::str::FromStr for QuerySource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.strip_prefix("random:") {
            Some(rest) => {
                let (count, seed) = rest
                    .split_once(':')
                    .ok_or_else(|| format!("expected random:<count>:<seed>, got `{s}`"))?;
                Ok(QuerySource::Random {
                    count: count.parse().map_err(|_| format!("bad query count `{count}`"))?,
                    seed: seed.parse().map_err(|_| format!("bad seed `{seed}`"))?,
                })
            }
            None => Ok(QuerySource::File(s.to_string())),
        }
    }
}

pub fn load(source: &QuerySource, g: &Graph, f: usize) -> Result<Vec<FailureSet>> {
    match source {
        QuerySource::File(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading queries from {path}"))?;
            parse(&text, g).with_context(|| format!("in {path}"))
        }
        QuerySource::Random { count, seed } => random(g, f, *count, *seed),
    }
}

/// One query per line: comma-separated `u-v` edges. Blank lines and `#`
/// comments are skipped; a line holding only `-` is the empty failure set.
pub fn parse(text: &str, g: &Graph) -> Result<Vec<FailureSet>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if body == "-" {
            out.push(FailureSet::empty());
            continue;
        }
        let mut ids = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (u, v) = token
                .split_once('-')
                .and_then(|(u, v)| Some((u.trim().parse::<VertexId>().ok()?, v.trim().parse::<VertexId>().ok()?)))
                .with_context(|| format!("line {line}: bad edge token `{token}`"))?;
            match g.find_edge(u, v) {
                Some(id) => ids.push(id),
                None => bail!("line {line}: no edge {u}-{v} in graph"),
            }
        }
        out.push(FailureSet::new(g, ids).with_context(|| format!("line {line}"))?);
    }
    Ok(out)
}

/// `count` sets of `f` distinct edges, uniform over `f`-subsets.
pub fn random(g: &Graph, f: usize, count: usize, seed: u64) -> Result<Vec<FailureSet>> {
    if count > 0 && f > g.m() {
        bail!("cannot draw {f} distinct failures from {} edges", g.m());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let ids = rand::seq::index::sample(&mut rng, g.m(), f).into_vec();
            Ok(FailureSet::new(g, ids)?)
        })
        .collect()
}

pub fn read_vertex_set(path: &Path, g: &Graph) -> Result<Vec<VertexId>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut set = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let v: VertexId = body
            .parse()
            .with_context(|| format!("{}: line {}: bad vertex `{body}`", path.display(), i + 1))?;
        if v >= g.n() {
            bail!("{}: line {}: vertex {v} out of range (n = {})", path.display(), i + 1, g.n());
        }
        set.push(v);
    }
    set.sort_unstable();
    set.dedup();
    if set.is_empty() {
        bail!("{}: vertex set is empty", path.display());
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn parses_lines() {
        let g = c4();
        let qs = parse("# header\n0-3\n\n1-2, 3-2\n-\n", &g).unwrap();
        assert_eq!(qs.len(), 3);
        assert_eq!(qs[1].endpoints(), &[1, 2, 3]);
        assert!(qs[2].is_empty());
    }

    #[test]
    fn missing_edge_names_line() {
        let err = parse("0-1\n0-2\n", &c4()).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn random_sets_have_f_edges() {
        let g = c4();
        let qs = random(&g, 2, 10, 5).unwrap();
        assert!(qs.iter().all(|q| q.len() == 2));
        assert_eq!(qs, random(&g, 2, 10, 5).unwrap());
        assert!(random(&g, 2, 0, 1).unwrap().is_empty());
        assert!(random(&g, 5, 1, 1).is_err());
    }

    #[test]
    fn query_source_syntax() {
        assert_eq!("random:3:9".parse(), Ok(QuerySource::Random { count: 3, seed: 9 }));
        assert_eq!("q.txt".parse(), Ok(QuerySource::File("q.txt".into())));
        assert!("random:3".parse::<QuerySource>().is_err());
    }
}
