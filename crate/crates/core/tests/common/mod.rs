//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use spex_core::{Graph, LinearForest};

/// Vertex pairs `(i, j)` with `i < j` in the bit order used for edge masks.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn mask_of(g: &Graph) -> u64 {
    pairs(g.n())
        .into_iter()
        .enumerate()
        .filter(|(_, (i, j))| g.has_edge(*i, *j))
        .fold(0u64, |m, (k, _)| m | 1 << k)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// For each permutation, where each edge bit moves.
pub fn edge_permutations(n: usize) -> Vec<Vec<usize>> {
    let ps = pairs(n);
    let index = |a: usize, b: usize| {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        ps.iter().position(|&e| e == (i, j)).unwrap()
    };
    permutations(n)
        .into_iter()
        .map(|p| ps.iter().map(|&(i, j)| index(p[i], p[j])).collect())
        .collect()
}

pub fn apply(mask: u64, moves: &[usize]) -> u64 {
    let mut out = 0;
    for (k, &t) in moves.iter().enumerate() {
        if mask >> k & 1 == 1 {
            out |= 1 << t;
        }
    }
    out
}

/// Pattern embeds in host, by trying every injective vertex map.
pub fn naive_contains(host: &Graph, pattern: &Graph) -> bool {
    fn go(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = map.len();
        if k == pattern.n() {
            return true;
        }
        for h in 0..host.n() {
            if used[h] {
                continue;
            }
            if (0..k).any(|p| pattern.has_edge(p, k) && !host.has_edge(map[p], h)) {
                continue;
            }
            used[h] = true;
            map.push(h);
            if go(host, pattern, map, used) {
                return true;
            }
            map.pop();
            used[h] = false;
        }
        false
    }
    pattern.n() <= host.n() && go(host, pattern, &mut Vec::new(), &mut vec![false; host.n()])
}

fn subdivide(g: &Graph, u: usize, v: usize) -> Graph {
    let n = g.n();
    let mut edges: Vec<_> = g.edges().filter(|&e| e != (u.min(v), u.max(v))).collect();
    edges.push((u, n));
    edges.push((n, v));
    Graph::from_edges(n + 1, &edges).unwrap()
}

/// Every subdivision of `K₅` or `K₃,₃` with at most seven vertices, up to
/// isomorphism (both graphs are edge-transitive).
pub fn kuratowski_patterns() -> Vec<Graph> {
    let k5 = Graph::from_edges(5, &pairs(5)).unwrap();
    let mut k33 = Graph::empty(6).unwrap();
    for a in 0..3 {
        for b in 3..6 {
            k33.add_edge(a, b);
        }
    }
    let k5_1 = subdivide(&k5, 0, 1);
    vec![
        k5.clone(),
        k5_1.clone(),
        subdivide(&k5_1, 0, 2),   // adjacent edges subdivided
        subdivide(&k5_1, 2, 3),   // disjoint edges subdivided
        subdivide(&k5_1, 0, 5),   // one edge subdivided twice
        k33.clone(),
        subdivide(&k33, 0, 3),
    ]
}

/// Planarity by searching for Kuratowski subdivisions directly (n ≤ 7).
pub fn oracle_planar(g: &Graph) -> bool {
    assert!(g.n() <= 7);
    !kuratowski_patterns().iter().any(|p| naive_contains(g, p))
}

/// One labeled representative per isomorphism class on `n ≤ 7` vertices.
pub fn iso_classes(n: usize) -> Vec<Graph> {
    let m = n * (n - 1) / 2;
    let moves = edge_permutations(n);
    let mut seen = vec![false; 1 << m];
    let mut out = Vec::new();
    for mask in 0..1u64 << m {
        if seen[mask as usize] {
            continue;
        }
        for mv in &moves {
            seen[apply(mask, mv) as usize] = true;
        }
        out.push(graph_from_mask(n, mask));
    }
    out
}

/// Lexicographically smallest edge mask over all relabelings.
pub fn naive_canonical_mask(g: &Graph) -> u64 {
    let mask = mask_of(g);
    edge_permutations(g.n())
        .iter()
        .map(|mv| apply(mask, mv))
        .min()
        .unwrap()
}

/// All nonincreasing integer partitions of `n`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
        }
        for m in (1..=max.min(n)).rev() {
            cur.push(m);
            go(n - m, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Forest containment by trying every assignment of pattern paths to host paths.
pub fn brute_forest_contains(host: &[usize], pattern: &[usize]) -> bool {
    fn go(i: usize, pattern: &[usize], room: &mut Vec<usize>) -> bool {
        if i == pattern.len() {
            return true;
        }
        for b in 0..room.len() {
            if room[b] >= pattern[i] {
                room[b] -= pattern[i];
                let ok = go(i + 1, pattern, room);
                room[b] += pattern[i];
                if ok {
                    return true;
                }
            }
        }
        false
    }
    go(0, pattern, &mut host.to_vec())
}

/// `ex^F(n, h)` by scanning every partition of `n`.
pub fn brute_exf(n: usize, h: &LinearForest) -> usize {
    partitions(n)
        .into_iter()
        .filter(|p| !brute_forest_contains(p, h.parts()))
        .map(|p| n - p.len())
        .max()
        .unwrap()
}

/// Every linear forest of total order `1..=max_order`.
pub fn all_forests(max_order: usize) -> Vec<LinearForest> {
    (1..=max_order)
        .flat_map(partitions)
        .map(|p| LinearForest::new(p).unwrap())
        .collect()
}
