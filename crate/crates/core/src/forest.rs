//! Linear forests kept as multisets of path orders.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// A disjoint union of paths, stored as path orders (vertex counts) sorted in
/// nonincreasing order. A part of order 1 is an isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct LinearForest {
    parts: Vec<usize>,
}

impl LinearForest {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ParameterOutOfRange {
                name: "parts",
                reason: format!("part {i} has order 0"),
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(LinearForest { parts })
    }

    /// `p` disjoint copies of `P_order`.
    pub fn copies(order: usize, p: usize) -> Result<Self> {
        LinearForest::new(vec![order; p])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.order() - self.parts.len()
    }

    pub fn longest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The forest with parts `i` and `j` replaced by one path of their summed order.
    pub fn merged(&self, i: usize, j: usize) -> LinearForest {
        assert!(i != j);
        let mut parts: Vec<usize> = self
            .parts
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, &p)| p)
            .collect();
        parts.push(self.parts[i] + self.parts[j]);
        LinearForest::new(parts).expect("merged parts are positive")
    }

    /// Realizes the forest as a graph; parts occupy consecutive labels in stored order.
    pub fn realize(&self) -> Result<Graph> {
        let mut g = Graph::empty(self.order())?;
        let mut start = 0;
        for &p in &self.parts {
            for v in start..start + p - 1 {
                g.add_edge(v, v + 1);
            }
            start += p;
        }
        Ok(g)
    }

    /// Recognizes a linear forest; `None` when `g` has a vertex of degree at
    /// least three or a cycle.
    pub fn of_graph(g: &Graph) -> Option<LinearForest> {
        if g.max_degree() > 2 {
            return None;
        }
        let mut parts = Vec::new();
        for comp in g.components() {
            let size = comp.count_ones() as usize;
            let edges: usize = bits(comp).map(|v| g.degree(v)).sum::<usize>() / 2;
            if edges != size - 1 {
                return None;
            }
            parts.push(size);
        }
        Some(LinearForest::new(parts).expect("component sizes are positive"))
    }
}

impl fmt::Display for LinearForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// Parses comma-separated path orders; `a^k` repeats a part `k` times
/// (so `2^3` is three disjoint edges).
impl FromStr for LinearForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut parts = Vec::new();
        for tok in trimmed.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (base, rep) = match tok.split_once('^') {
                Some((b, r)) => (b, r),
                None => (tok, "1"),
            };
            let base: usize = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad part `{tok}` in forest `{s}`")))?;
            let rep: usize = rep
                .parse()
                .map_err(|_| Error::Parse(format!("bad repeat `{tok}` in forest `{s}`")))?;
            parts.extend(std::iter::repeat_n(base, rep));
        }
        if parts.is_empty() {
            return Err(Error::Parse(format!("empty forest `{s}`")));
        }
        LinearForest::new(parts)
    }
}

impl TryFrom<Vec<usize>> for LinearForest {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        LinearForest::new(parts)
    }
}

impl From<LinearForest> for Vec<usize> {
    fn from(f: LinearForest) -> Vec<usize> {
        f.parts
    }
}
