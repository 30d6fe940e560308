//! Directed topologies and their canonical constructions.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A directed graph on nodes `0..n`: a set of ordered links `(i, j)`
/// with `i != j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    n: usize,
    links: BTreeSet<(usize, usize)>,
}

impl Topology {
    pub fn new(n: usize, links: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidTopology {
                reason: format!("need at least 2 nodes, got {n}"),
            });
        }
        let mut set = BTreeSet::new();
        for (i, j) in links {
            if i == j {
                return Err(Error::InvalidTopology {
                    reason: format!("self-loop at node {i}"),
                });
            }
            if i >= n || j >= n {
                return Err(Error::InvalidTopology {
                    reason: format!("link ({i}, {j}) out of range for {n} nodes"),
                });
            }
            set.insert((i, j));
        }
        Ok(Topology { n, links: set })
    }

    /// Assemble a topology from per-node outgoing-link sets.
    pub fn from_strategies(strategies: &[BTreeSet<usize>]) -> Result<Self> {
        let n = strategies.len();
        Topology::new(
            n,
            strategies
                .iter()
                .enumerate()
                .flat_map(|(i, targets)| targets.iter().map(move |&j| (i, j))),
        )
    }

    /// Per-node outgoing-link sets (the strategy profile of the game).
    pub fn to_strategies(&self) -> Vec<BTreeSet<usize>> {
        let mut out = vec![BTreeSet::new(); self.n];
        for &(i, j) in &self.links {
            out[i].insert(j);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn links(&self) -> &BTreeSet<(usize, usize)> {
        &self.links
    }

    pub fn has_link(&self, i: usize, j: usize) -> bool {
        self.links.contains(&(i, j))
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.links.range((i, 0)..(i + 1, 0)).count()
    }

    pub fn out_neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.links.range((i, 0)..(i + 1, 0)).map(|&(_, j)| j)
    }

    /// Serialize in the line-oriented exchange format (see [`Topology::parse`]).
    pub fn serialize(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for &(i, j) in &self.links {
            let _ = writeln!(out, "{i} {j}");
        }
        out
    }

    /// Parse the exchange format: a `n=<count>` header line followed by
    /// one `i j` pair per line (0-indexed, whitespace-separated). Blank
    /// lines are ignored; self-loops and out-of-range indices are
    /// rejected.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(no, line)| (no + 1, line.trim()))
            .filter(|(_, line)| !line.is_empty());

        let (line_no, header) = lines.next().ok_or(Error::TopologyParse {
            line: 0,
            reason: "empty input".into(),
        })?;
        let n: usize = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::TopologyParse {
                line: line_no,
                reason: format!("expected `n=<count>`, got `{header}`"),
            })?;

        let mut links = Vec::new();
        for (line_no, line) in lines {
            let mut fields = line.split_whitespace();
            let pair = (|| {
                let i: usize = fields.next()?.parse().ok()?;
                let j: usize = fields.next()?.parse().ok()?;
                if fields.next().is_some() {
                    return None;
                }
                Some((i, j))
            })();
            let (i, j) = pair.ok_or_else(|| Error::TopologyParse {
                line: line_no,
                reason: format!("expected `i j`, got `{line}`"),
            })?;
            links.push((i, j));
        }
        Topology::new(n, links).map_err(|e| match e {
            Error::InvalidTopology { reason } => Error::TopologyParse { line: 0, reason },
            other => other,
        })
    }

    pub fn read_file(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: &Path) -> Result<()> {
        Ok(std::fs::write(path, self.serialize())?)
    }
}

/// Canonical topology families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TopologyKind {
    /// Every ordered pair linked.
    Full,
    /// Bidirectional spokes between node 0 and everyone else.
    Star,
    /// Single cycle `0 -> 1 -> ... -> n-1 -> 0`.
    DirectedRing,
    /// Each ordered pair included independently with probability `p`.
    Random { p: f64, seed: u64 },
}

pub fn make_topology(kind: TopologyKind, n: usize) -> Result<Topology> {
    match kind {
        TopologyKind::Full => Topology::new(
            n,
            (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))),
        ),
        TopologyKind::Star => Topology::new(n, (1..n).flat_map(|i| [(0, i), (i, 0)])),
        TopologyKind::DirectedRing => Topology::new(n, (0..n).map(|i| (i, (i + 1) % n))),
        TopologyKind::Random { p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter {
                    name: "p",
                    value: p,
                });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut links = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j && rng.gen::<f64>() < p {
                        links.push((i, j));
                    }
                }
            }
            Topology::new(n, links)
        }
    }
}
