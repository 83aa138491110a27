//! Perron-weight structure of candidate extremal graphs.

use serde::{Deserialize, Serialize};

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::forest::LinearForest;
use crate::graph::{bit, bits, Graph};
use crate::patterns::is_free;
use crate::planarity::planar;
use crate::spectral::perron::{perron, PerronConfig};

pub const DEFAULT_EPSILON: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ProfileCase {
    /// `G[B]` contains a cycle.
    CycleInB,
    /// `G[B]` is a linear forest.
    BLinearForest,
    /// `G[B]` is acyclic with a vertex of degree at least 3.
    Other,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureProfile {
    pub lambda: f64,
    /// Vertex of Perron weight 1.
    pub x: usize,
    /// Heaviest vertex other than `x`.
    pub w: usize,
    pub w_weight: f64,
    /// `N(x) ∩ N(w)`.
    pub b: Vec<usize>,
    /// `V ∖ (B ∪ {x, w})`.
    pub a: Vec<usize>,
    pub case: ProfileCase,
    pub epsilon: f64,
    /// Number of vertices with weight above `epsilon`.
    pub large: usize,
    pub small: usize,
}

fn has_cycle(g: &Graph) -> bool {
    g.components()
        .into_iter()
        .any(|c| g.induced(c).0.edge_count() >= c.count_ones() as usize)
}

pub fn structure_profile(g: &Graph, epsilon: f64) -> Result<StructureProfile> {
    if !(epsilon > 0.0 && epsilon <= DEFAULT_EPSILON) {
        return Err(Error::ParameterOutOfRange {
            name: "epsilon",
            reason: format!("must lie in (0, 1e-4], got {epsilon}"),
        });
    }
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let r = perron(g, &PerronConfig::default())?;
    let v = &r.vector;
    let x = (0..g.n()).find(|&i| v[i] == 1.0).expect("max-normalized vector");
    let w = (0..g.n())
        .filter(|&i| i != x)
        .reduce(|a, b| if v[b] > v[a] { b } else { a })
        .expect("at least two vertices");
    let b_mask = g.row(x) & g.row(w);
    let a_mask = g.vertex_mask() & !b_mask & !bit(x) & !bit(w);
    let (gb, _) = g.induced(b_mask);
    let case = if has_cycle(&gb) {
        ProfileCase::CycleInB
    } else if LinearForest::of_graph(&gb).is_some() {
        ProfileCase::BLinearForest
    } else {
        ProfileCase::Other
    };
    let large = v.iter().filter(|&&z| z > epsilon).count();
    Ok(StructureProfile {
        lambda: r.lambda,
        x,
        w,
        w_weight: v[w],
        b: bits(b_mask).collect(),
        a: bits(a_mask).collect(),
        case,
        epsilon,
        large,
        small: g.n() - large,
    })
}

/// Two adjacent vertices adjacent to every other vertex, if any.
pub fn dominating_edge(g: &Graph) -> Option<(usize, usize)> {
    let all = g.vertex_mask();
    let dom: Vec<usize> = (0..g.n()).filter(|&v| g.row(v) | bit(v) == all).collect();
    dom.first().zip(dom.get(1)).map(|(&a, &b)| (a, b))
}

/// Whether `g` is `2K₁ + C_{n−2}` or has `K₂ + I_{n−2}` as a spanning subgraph.
/// `g` must be planar, connected and `f`-free.
pub fn verify_theorem11_dichotomy(g: &Graph, f: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    if !planar(g) {
        return Err(Error::Precondition("graph is not planar".into()));
    }
    if !is_free(g, f) {
        return Err(Error::Precondition("graph contains the forbidden pattern".into()));
    }
    if dominating_edge(g).is_some() {
        return Ok(true);
    }
    Ok(g.n() >= 5 && is_isomorphic(g, &Family::TwoApexCycle(g.n()).construct()?))
}
