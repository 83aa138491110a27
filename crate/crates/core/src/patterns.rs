//! Subgraph containment, chromatic number and linear-forest packing.
//!
//! Containment uses subgraph (not induced) semantics throughout.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::LinearForest;
use crate::graph::{bit, bits, Graph};

/// Result of a containment query: an injective map from pattern vertices to
/// host vertices, or `None` when the host is pattern-free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentWitness {
    pub mapping: Option<Vec<usize>>,
}

impl ContainmentWitness {
    pub fn is_present(&self) -> bool {
        self.mapping.is_some()
    }

    /// Checks the mapping directly: injective, in range, and edge-preserving.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        let Some(map) = &self.mapping else {
            return true;
        };
        if map.len() != pattern.n() {
            return false;
        }
        let mut used = 0u64;
        for &h in map {
            if h >= host.n() || used & bit(h) != 0 {
                return false;
            }
            used |= bit(h);
        }
        pattern.edges().all(|(a, b)| host.has_edge(map[a], map[b]))
    }
}

/// Pattern vertices in search order: highest degree first, then greedily the
/// vertex with the most already-placed neighbors (ties by degree).
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                (
                    (pattern.row(v) & placed).count_ones(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex remains");
        placed |= bit(next);
        order.push(next);
    }
    order
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    /// Host vertices whose degree is at least `d`, indexed by `d`.
    degree_at_least: Vec<u64>,
    map: Vec<usize>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize, used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut candidates = self.host.vertex_mask() & !used;
        candidates &= self.degree_at_least[self.pattern.degree(p)];
        for q in self.order[..depth].iter().copied() {
            if self.pattern.has_edge(p, q) {
                candidates &= self.host.row(self.map[q]);
            }
        }
        for h in bits(candidates) {
            self.map[p] = h;
            if self.extend(depth + 1, used | bit(h)) {
                return true;
            }
        }
        false
    }
}

/// Finds a copy of `pattern` in `host` by backtracking with degree and
/// neighborhood pruning.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> ContainmentWitness {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return ContainmentWitness { mapping: None };
    }
    let max_deg = pattern.max_degree();
    if host.max_degree() < max_deg {
        return ContainmentWitness { mapping: None };
    }
    let degree_at_least = (0..=max_deg)
        .map(|d| (0..host.n()).filter(|&v| host.degree(v) >= d).fold(0u64, |m, v| m | bit(v)))
        .collect();
    let mut m = Matcher {
        host,
        pattern,
        order: search_order(pattern),
        degree_at_least,
        map: vec![usize::MAX; pattern.n()],
    };
    let found = m.extend(0, 0);
    ContainmentWitness {
        mapping: found.then_some(m.map),
    }
}

pub fn is_free(host: &Graph, pattern: &Graph) -> bool {
    !contains_subgraph(host, pattern).is_present()
}

pub fn is_claw_free(g: &Graph) -> bool {
    let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).expect("claw");
    is_free(g, &claw)
}

/// Largest graph accepted by [`chromatic_number`].
pub const CHROMATIC_MAX_VERTICES: usize = 16;

fn colorable(g: &Graph, order: &[usize], colors: &mut [u8], depth: usize, k: u8) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let mut forbidden = 0u32;
    for u in g.neighbors(v) {
        if colors[u] != u8::MAX {
            forbidden |= 1 << colors[u];
        }
    }
    // The first vertices can only open one new color class at a time.
    let highest_used = order[..depth]
        .iter()
        .map(|&u| colors[u])
        .max()
        .map_or(0, |c| c + 1);
    for c in 0..k.min(highest_used + 1) {
        if forbidden & (1 << c) == 0 {
            colors[v] = c;
            if colorable(g, order, colors, depth + 1, k) {
                return true;
            }
        }
    }
    colors[v] = u8::MAX;
    false
}

/// Exact chromatic number by backtracking over `k = 1, 2, …`.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > CHROMATIC_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "chromatic_number",
            max: CHROMATIC_MAX_VERTICES,
            got: g.n(),
        });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let order = search_order(g);
    for k in 2..=g.n() as u8 {
        let mut colors = vec![u8::MAX; g.n()];
        if colorable(g, &order, &mut colors, 0, k) {
            return Ok(k as usize);
        }
    }
    Ok(g.n())
}

fn pack(items: &[usize], bins: &mut [usize]) -> bool {
    let Some((&item, rest)) = items.split_first() else {
        return true;
    };
    for i in 0..bins.len() {
        if bins[i] < item || bins[..i].contains(&bins[i]) {
            continue;
        }
        bins[i] -= item;
        let ok = pack(rest, bins);
        bins[i] += item;
        if ok {
            return true;
        }
    }
    false
}

/// Whether `pattern` embeds in `host`. A host path of order `m` holds any set
/// of pattern paths whose orders sum to at most `m`, so this is exact bin packing.
pub fn forest_contains(host: &LinearForest, pattern: &LinearForest) -> bool {
    if pattern.order() > host.order() || pattern.longest() > host.longest() {
        return false;
    }
    let mut bins = host.parts().to_vec();
    pack(pattern.parts(), &mut bins)
}

/// `candidate` is `h`-maximal when it is `h`-free and joining any two of its
/// parts into one path creates a copy of `h`.
pub fn is_h_maximal(candidate: &LinearForest, h: &LinearForest) -> bool {
    if forest_contains(candidate, h) {
        return false;
    }
    let parts = candidate.parts();
    for i in 0..parts.len() {
        if i > 0 && parts[i] == parts[i - 1] {
            continue;
        }
        for j in i + 1..parts.len() {
            if j > i + 1 && parts[j] == parts[j - 1] {
                continue;
            }
            if !forest_contains(&candidate.merged(i, j), h) {
                return false;
            }
        }
    }
    true
}
