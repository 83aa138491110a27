//! Named graph families and their constructors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::LinearForest;
use crate::graph::{join, Graph, MAX_VERTICES};

/// A named graph with its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "kebab-case")]
pub enum Family {
    /// `P_n`.
    Path(usize),
    /// `C_k`, `k ≥ 3`.
    Cycle(usize),
    /// `I_k`.
    Empty(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{a,b}`.
    CompleteBipartite(usize, usize),
    /// `pK₂`.
    Matching(usize),
    /// `B_p = K₂ + I_p`.
    Book(usize),
    /// `2K₁ + C_{n−2}`: two nonadjacent apexes complete to an `(n−2)`-cycle.
    TwoApexCycle(usize),
    /// `K₂ + C_{n−2}`.
    JoinK2Cycle(usize),
    /// `K₂ + ((n−2)/2)K₂` for even `n`.
    JoinK2Matching(usize),
    /// `K₂ + (((n−3)/2)K₂ ∪ K₁)` for odd `n`.
    JoinK2NearMatching(usize),
    /// `K₂ + H` for a linear forest `H`.
    JoinK2Forest(LinearForest),
}

fn out_of_range(name: &'static str, reason: impl Into<String>) -> Error {
    Error::ParameterOutOfRange {
        name,
        reason: reason.into(),
    }
}

fn check_order(name: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(out_of_range(name, format!("{n} < {min}")))
    } else if n > MAX_VERTICES {
        Err(out_of_range(name, format!("{n} exceeds {MAX_VERTICES} vertices")))
    } else {
        Ok(())
    }
}

fn k2() -> Graph {
    Graph::from_edges(2, &[(0, 1)]).expect("K2")
}

fn cycle(k: usize) -> Result<Graph> {
    check_order("k", k, 3)?;
    let mut g = Graph::empty(k)?;
    for v in 0..k {
        g.add_edge(v, (v + 1) % k);
    }
    Ok(g)
}

fn matching_forest(vertices: usize) -> LinearForest {
    let mut parts = vec![2; vertices / 2];
    if vertices % 2 == 1 {
        parts.push(1);
    }
    LinearForest::new(parts).expect("positive parts")
}

impl Family {
    /// Vertex count of the constructed graph.
    pub fn order(&self) -> usize {
        match self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Empty(n)
            | Family::Complete(n)
            | Family::TwoApexCycle(n)
            | Family::JoinK2Cycle(n)
            | Family::JoinK2Matching(n)
            | Family::JoinK2NearMatching(n) => *n,
            Family::CompleteBipartite(a, b) => a + b,
            Family::Matching(p) => 2 * p,
            Family::Book(p) => p + 2,
            Family::JoinK2Forest(f) => f.order() + 2,
        }
    }

    /// Builds the graph.
    pub fn construct(&self) -> Result<Graph> {
        match self {
            Family::Path(n) => {
                check_order("n", *n, 1)?;
                LinearForest::new(vec![*n])?.realize()
            }
            Family::Cycle(k) => cycle(*k),
            Family::Empty(k) => {
                check_order("k", *k, 1)?;
                Graph::empty(*k)
            }
            Family::Complete(n) => {
                check_order("n", *n, 1)?;
                let mut g = Graph::empty(*n)?;
                for u in 0..*n {
                    for v in u + 1..*n {
                        g.add_edge(u, v);
                    }
                }
                Ok(g)
            }
            Family::CompleteBipartite(a, b) => {
                check_order("a", *a, 1)?;
                check_order("b", *b, 1)?;
                join(&Graph::empty(*a)?, &Graph::empty(*b)?)
            }
            Family::Matching(p) => {
                check_order("p", *p, 1)?;
                check_order("2p", 2 * p, 2)?;
                LinearForest::copies(2, *p)?.realize()
            }
            Family::Book(p) => {
                check_order("p", *p, 1)?;
                check_order("p+2", p + 2, 3)?;
                join(&k2(), &Graph::empty(*p)?)
            }
            Family::TwoApexCycle(n) => {
                check_order("n", *n, 5)?;
                join(&Graph::empty(2)?, &cycle(n - 2)?)
            }
            Family::JoinK2Cycle(n) => {
                check_order("n", *n, 5)?;
                join(&k2(), &cycle(n - 2)?)
            }
            Family::JoinK2Matching(n) => {
                check_order("n", *n, 4)?;
                if n % 2 != 0 {
                    return Err(Error::ParityMismatch {
                        family: "join-k2-matching",
                        expected: "even",
                        n: *n,
                    });
                }
                join(&k2(), &matching_forest(n - 2).realize()?)
            }
            Family::JoinK2NearMatching(n) => {
                check_order("n", *n, 3)?;
                if n % 2 == 0 {
                    return Err(Error::ParityMismatch {
                        family: "join-k2-near-matching",
                        expected: "odd",
                        n: *n,
                    });
                }
                join(&k2(), &matching_forest(n - 2).realize()?)
            }
            Family::JoinK2Forest(f) => {
                check_order("|H|+2", f.order() + 2, 2)?;
                join(&k2(), &f.realize()?)
            }
        }
    }
}

/// The `P₃`-maximal forest on `m` vertices: a matching plus at most one isolated vertex.
pub fn near_perfect_matching(m: usize) -> LinearForest {
    matching_forest(m)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "kbip:{a},{b}"),
            Family::Matching(p) => write!(f, "matching:{p}"),
            Family::Book(p) => write!(f, "book:{p}"),
            Family::TwoApexCycle(n) => write!(f, "two-apex-cycle:{n}"),
            Family::JoinK2Cycle(n) => write!(f, "join-k2-cycle:{n}"),
            Family::JoinK2Matching(n) => write!(f, "join-k2-matching:{n}"),
            Family::JoinK2NearMatching(n) => write!(f, "join-k2-near-matching:{n}"),
            Family::JoinK2Forest(h) => {
                let s: Vec<String> = h.parts().iter().map(|p| p.to_string()).collect();
                write!(f, "join-k2-forest:{}", s.join(","))
            }
        }
    }
}

fn parse_usize(s: &str, whole: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{s}` in family `{whole}`")))
}

/// Parses family shorthands such as `k5-e`, `book:3`, `two-apex-cycle:10`,
/// `k4`, `k3,3`, `c7`, `p5`, `i3`, `join-k2-forest:2,2`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "k5-e" | "k5\\e" => return Ok(Family::JoinK2Forest(LinearForest::new(vec![3])?)),
            "claw" => return Ok(Family::CompleteBipartite(1, 3)),
            _ => {}
        }
        if let Some((name, arg)) = t.split_once(':') {
            let one = || parse_usize(arg, s);
            return match name {
                "path" | "p" => Ok(Family::Path(one()?)),
                "cycle" | "c" => Ok(Family::Cycle(one()?)),
                "empty" | "i" => Ok(Family::Empty(one()?)),
                "complete" | "k" => Ok(Family::Complete(one()?)),
                "kbip" | "complete-bipartite" => {
                    let (a, b) = arg
                        .split_once(',')
                        .ok_or_else(|| Error::Parse(format!("`{s}` needs two sizes")))?;
                    Ok(Family::CompleteBipartite(parse_usize(a, s)?, parse_usize(b, s)?))
                }
                "matching" => Ok(Family::Matching(one()?)),
                "book" => Ok(Family::Book(one()?)),
                "two-apex-cycle" => Ok(Family::TwoApexCycle(one()?)),
                "join-k2-cycle" | "k2+cycle" => Ok(Family::JoinK2Cycle(one()?)),
                "join-k2-matching" => Ok(Family::JoinK2Matching(one()?)),
                "join-k2-near-matching" => Ok(Family::JoinK2NearMatching(one()?)),
                "join-k2-forest" | "k2+forest" | "k2+" => {
                    Ok(Family::JoinK2Forest(arg.parse::<LinearForest>()?))
                }
                _ => Err(Error::Parse(format!("unknown family `{name}`"))),
            };
        }
        // Compact forms: k4, k3,3, c7, p5, i3.
        let (head, rest) = t.split_at(1.min(t.len()));
        match head {
            "k" if rest.contains(',') => {
                let (a, b) = rest.split_once(',').expect("checked");
                Ok(Family::CompleteBipartite(parse_usize(a, s)?, parse_usize(b, s)?))
            }
            "k" => Ok(Family::Complete(parse_usize(rest, s)?)),
            "c" => Ok(Family::Cycle(parse_usize(rest, s)?)),
            "p" => Ok(Family::Path(parse_usize(rest, s)?)),
            "i" => Ok(Family::Empty(parse_usize(rest, s)?)),
            _ => Err(Error::Parse(format!("unknown family `{s}`"))),
        }
    }
}
