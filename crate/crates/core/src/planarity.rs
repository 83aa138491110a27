//! Planarity testing with certificates in both directions.
//!
//! Planar graphs get a rotation system built block by block with the
//! path-addition (Demoucron–Malgrange–Pertuiset) method. Nonplanar graphs get
//! an edge set forming a subdivision of `K₅` or `K₃,₃`, found by deleting edges
//! while the remainder stays nonplanar.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// Cyclic neighbor order around each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub rotation: Vec<Vec<usize>>,
}

impl RotationSystem {
    fn successor(&self, v: usize, u: usize) -> usize {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&w| w == u).expect("neighbor in rotation");
        rot[(i + 1) % rot.len()]
    }

    /// Traces faces: after arriving at `b` along `a → b`, leave along `b → σ_b(a)`.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.rotation.len();
        let mut seen: Vec<u64> = vec![0; n];
        let mut faces = Vec::new();
        for a in 0..n {
            for &b in &self.rotation[a] {
                if seen[a] & bit(b) != 0 {
                    continue;
                }
                let mut face = Vec::new();
                let (mut x, mut y) = (a, b);
                while seen[x] & bit(y) == 0 {
                    seen[x] |= bit(y);
                    face.push(x);
                    let z = self.successor(y, x);
                    x = y;
                    y = z;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Checks that the rotation lists are permutations of the neighborhoods and
    /// that every component with an edge satisfies `V − E + F = 2`.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.rotation.len() != g.n() {
            return false;
        }
        for v in 0..g.n() {
            let mask = self.rotation[v].iter().fold(0u64, |m, &u| m | bit(u));
            if self.rotation[v].len() != g.degree(v) || mask != g.row(v) {
                return false;
            }
        }
        let faces = self.faces();
        for comp in g.components() {
            let vertices = comp.count_ones() as usize;
            if vertices == 1 {
                continue;
            }
            let edges = bits(comp).map(|v| g.degree(v)).sum::<usize>() / 2;
            let face_count = faces.iter().filter(|f| comp & bit(f[0]) != 0).count();
            if vertices + face_count != edges + 2 {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subgraph that is a subdivision of `K₅` or `K₃,₃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub edges: Vec<(usize, usize)>,
    pub branch_vertices: Vec<usize>,
}

impl KuratowskiWitness {
    /// Rebuilds the branch graph from `edges` alone and checks it is `K₅` or
    /// `K₃,₃` with every other vertex of degree two, and that `edges ⊆ E(g)`.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.edges.iter().any(|&(u, v)| u >= g.n() || v >= g.n() || !g.has_edge(u, v)) {
            return false;
        }
        match classify_subdivision(g.n(), &self.edges) {
            Some((kind, branch)) => kind == self.kind && branch == self.branch_vertices,
            None => false,
        }
    }
}

/// Identifies a `K₅` / `K₃,₃` subdivision given by an edge list.
pub fn classify_subdivision(n: usize, edges: &[(usize, usize)]) -> Option<(KuratowskiKind, Vec<usize>)> {
    let h = Graph::from_edges(n, edges).ok()?;
    if h.edge_count() != edges.len() {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| h.degree(v) >= 3).collect();
    let interior_ok = (0..n).all(|v| matches!(h.degree(v), 0 | 2) || h.degree(v) >= 3);
    if !interior_ok {
        return None;
    }
    let used = (0..n).filter(|&v| h.degree(v) > 0).fold(0u64, |m, v| m | bit(v));
    if h.reach(branch.first().copied()?, used) != used {
        return None;
    }
    let kind = match (branch.len(), branch.iter().all(|&v| h.degree(v) == 4), branch.iter().all(|&v| h.degree(v) == 3)) {
        (5, true, _) => KuratowskiKind::K5,
        (6, _, true) => KuratowskiKind::K33,
        _ => return None,
    };
    let branch_mask = branch.iter().fold(0u64, |m, &v| m | bit(v));
    // Follow each branch path to its other end.
    let mut contracted = vec![0u64; n];
    for &b in &branch {
        for first in h.neighbors(b) {
            let (mut prev, mut cur) = (b, first);
            while branch_mask & bit(cur) == 0 {
                let next = bits(h.row(cur) & !bit(prev)).next()?;
                prev = cur;
                cur = next;
            }
            if cur == b || contracted[b] & bit(cur) != 0 {
                return None;
            }
            contracted[b] |= bit(cur);
        }
    }
    let ok = match kind {
        KuratowskiKind::K5 => branch.iter().all(|&b| contracted[b] == branch_mask & !bit(b)),
        KuratowskiKind::K33 => {
            let side = contracted[branch[0]];
            let other = branch_mask & !side;
            side.count_ones() == 3
                && bits(side).all(|v| contracted[v] == other)
                && bits(other).all(|v| contracted[v] == side)
        }
    };
    ok.then_some((kind, branch))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PlanarityCertificate {
    Embedding(RotationSystem),
    Kuratowski(KuratowskiWitness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub certificate: PlanarityCertificate,
}

impl PlanarityVerdict {
    pub fn verify(&self, g: &Graph) -> bool {
        match (&self.certificate, self.planar) {
            (PlanarityCertificate::Embedding(r), true) => r.verify(g),
            (PlanarityCertificate::Kuratowski(w), false) => w.verify(g),
            _ => false,
        }
    }
}

/// Biconnected components as edge lists (Hopcroft–Tarjan with an edge stack).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, v: usize, parent: usize) {
        s.time += 1;
        s.disc[v] = s.time;
        s.low[v] = s.time;
        for u in s.g.neighbors(v) {
            if s.disc[u] == 0 {
                s.stack.push((v, u));
                dfs(s, u, v);
                s.low[v] = s.low[v].min(s.low[u]);
                if s.low[u] >= s.disc[v] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (v, u) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if u != parent && s.disc[u] < s.disc[v] {
                s.stack.push((v, u));
                s.low[v] = s.low[v].min(s.disc[u]);
            }
        }
    }
    let mut s = State {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..g.n() {
        if s.disc[v] == 0 && g.degree(v) > 0 {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.out
}

fn find_cycle(g: &Graph) -> Vec<usize> {
    // In a block with at least two edges every edge lies on a cycle: drop one
    // edge `ab` and close it with a shortest `b`–`a` path.
    let (a, b) = g.edges().next().expect("nonempty block");
    let mut prev = vec![usize::MAX; g.n()];
    let mut visited = bit(b);
    let mut frontier = vec![b];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            for y in bits(g.row(x) & !visited) {
                if x == b && y == a {
                    continue;
                }
                visited |= bit(y);
                prev[y] = x;
                if y == a {
                    let mut cycle = vec![a];
                    let mut w = a;
                    while w != b {
                        w = prev[w];
                        cycle.push(w);
                    }
                    return cycle;
                }
                next.push(y);
            }
        }
        frontier = next;
    }
    unreachable!("biconnected block without a cycle")
}

struct Fragment {
    attachments: u64,
    /// Vertices of the fragment not yet embedded (empty for a single chord).
    interior: u64,
    chord: Option<(usize, usize)>,
}

/// Faces of a planar embedding of a biconnected graph with at least one cycle,
/// each an oriented vertex cycle, or `None` when the graph is nonplanar.
fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let cycle = find_cycle(g);
    let mut embedded_v = cycle.iter().fold(0u64, |m, &v| m | bit(v));
    let mut embedded_adj = vec![0u64; g.n()];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded_adj[a] |= bit(b);
        embedded_adj[b] |= bit(a);
    }
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect::<Vec<_>>()];
    let mut embedded_edges = cycle.len();
    let active = (0..g.n()).filter(|&v| g.degree(v) > 0).fold(0u64, |m, v| m | bit(v));

    while embedded_edges < g.edge_count() {
        let mut fragments = Vec::new();
        for v in bits(embedded_v) {
            for u in bits(g.row(v) & embedded_v & !embedded_adj[v]) {
                if v < u {
                    fragments.push(Fragment {
                        attachments: bit(u) | bit(v),
                        interior: 0,
                        chord: Some((v, u)),
                    });
                }
            }
        }
        let mut seen = embedded_v;
        for s in bits(active & !embedded_v) {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = g.reach(s, active & !embedded_v);
            seen |= comp;
            let attachments = bits(comp).fold(0u64, |m, v| m | g.row(v)) & embedded_v;
            fragments.push(Fragment {
                attachments,
                interior: comp,
                chord: None,
            });
        }
        let face_masks: Vec<u64> = faces
            .iter()
            .map(|f| f.iter().fold(0u64, |m, &v| m | bit(v)))
            .collect();
        let admissible = |fr: &Fragment| -> Vec<usize> {
            (0..faces.len())
                .filter(|&i| fr.attachments & !face_masks[i] == 0)
                .collect()
        };
        let mut choice: Option<(usize, usize)> = None;
        for (i, fr) in fragments.iter().enumerate() {
            let adm = admissible(fr);
            match adm.len() {
                0 => return None,
                1 => {
                    choice = Some((i, adm[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, adm[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment while edges remain");
        let fr = &fragments[fi];
        let path = match fr.chord {
            Some((a, b)) => vec![a, b],
            None => fragment_path(g, fr),
        };
        for w in path.windows(2) {
            embedded_adj[w[0]] |= bit(w[1]);
            embedded_adj[w[1]] |= bit(w[0]);
            embedded_v |= bit(w[0]) | bit(w[1]);
        }
        embedded_edges += path.len() - 1;

        let face = faces.swap_remove(face_idx);
        let (u, v) = (path[0], *path.last().expect("path"));
        let i = face.iter().position(|&x| x == u).expect("u on face");
        let j = face.iter().position(|&x| x == v).expect("v on face");
        let interior = &path[1..path.len() - 1];
        let walk = |from: usize, to: usize| -> Vec<usize> {
            let mut out = Vec::new();
            let mut k = from;
            loop {
                out.push(face[k]);
                if k == to {
                    break;
                }
                k = (k + 1) % face.len();
            }
            out
        };
        let mut first = walk(i, j);
        first.extend(interior.iter().rev());
        let mut second = walk(j, i);
        second.extend(interior.iter());
        faces.push(first);
        faces.push(second);
    }
    Some(faces)
}

/// A path through a fragment's interior joining two distinct attachment vertices.
fn fragment_path(g: &Graph, fr: &Fragment) -> Vec<usize> {
    let mut att = bits(fr.attachments);
    let a = att.next().expect("fragment has an attachment");
    let b = att.next().expect("fragment in a biconnected block has two attachments");
    // BFS inside the interior from the neighbors of `a` to a neighbor of `b`.
    let mut prev = vec![usize::MAX; g.n()];
    let mut frontier: Vec<usize> = bits(g.row(a) & fr.interior).collect();
    let mut visited = g.row(a) & fr.interior;
    for &s in &frontier {
        prev[s] = a;
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            if g.has_edge(x, b) {
                let mut path = vec![b, x];
                let mut y = x;
                while prev[y] != a {
                    y = prev[y];
                    path.push(y);
                }
                path.push(a);
                path.reverse();
                return path;
            }
            for y in bits(g.row(x) & fr.interior & !visited) {
                visited |= bit(y);
                prev[y] = x;
                next.push(y);
            }
        }
        frontier = next;
    }
    unreachable!("fragment interior is connected to every attachment")
}

fn rotation_from_faces(n: usize, faces: &[Vec<usize>], rot: &mut [Vec<usize>]) {
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (a, b, c) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            succ[b].push((a, c));
        }
    }
    for (v, pairs) in succ.into_iter().enumerate() {
        if pairs.is_empty() {
            continue;
        }
        let start = pairs[0].0;
        let mut cur = start;
        loop {
            rot[v].push(cur);
            cur = pairs.iter().find(|p| p.0 == cur).expect("successor defined").1;
            if cur == start {
                break;
            }
        }
    }
}

/// A planar rotation system, or `None` for nonplanar graphs.
pub fn embed(g: &Graph) -> Option<RotationSystem> {
    if g.n() >= 3 && g.edge_count() > 3 * g.n() - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let mut sub = Graph::empty(g.n()).expect("same order");
        for &(u, v) in &block {
            sub.add_edge(u, v);
        }
        let faces = embed_biconnected(&sub)?;
        rotation_from_faces(g.n(), &faces, &mut rotation);
    }
    Some(RotationSystem { rotation })
}

pub fn planar(g: &Graph) -> bool {
    embed(g).is_some()
}

/// An edge-minimal nonplanar subgraph, which is a Kuratowski subdivision.
fn kuratowski_subgraph(g: &Graph) -> KuratowskiWitness {
    let mut h = g.clone();
    let edges: Vec<_> = g.edges().collect();
    for (u, v) in edges {
        h.remove_edge(u, v);
        if planar(&h) {
            h.add_edge(u, v);
        }
    }
    let edges: Vec<_> = h.edges().collect();
    let (kind, branch_vertices) = classify_subdivision(g.n(), &edges)
        .expect("edge-minimal nonplanar graphs are Kuratowski subdivisions");
    KuratowskiWitness {
        kind,
        edges,
        branch_vertices,
    }
}

/// Exact planarity test with a checkable certificate.
pub fn is_planar(g: &Graph) -> PlanarityVerdict {
    match embed(g) {
        Some(r) => PlanarityVerdict {
            planar: true,
            certificate: PlanarityCertificate::Embedding(r),
        },
        None => PlanarityVerdict {
            planar: false,
            certificate: PlanarityCertificate::Kuratowski(kuratowski_subgraph(g)),
        },
    }
}

/// Quick necessary condition: `false` means certainly nonplanar
/// (`e > 3n − 6`, or bipartite with `e > 2n − 4`); `true` is inconclusive.
pub fn edge_bound_check(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n < 3 {
        return Err(Error::Precondition(format!("edge bounds need n ≥ 3, got {n}")));
    }
    let e = g.edge_count();
    if e > 3 * n - 6 {
        return Ok(false);
    }
    Ok(!(g.is_bipartite() && e > 2 * n - 4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;
    use crate::forest::LinearForest;
    use crate::graph::join;

    fn g(fam: &str) -> Graph {
        fam.parse::<Family>().unwrap().construct().unwrap()
    }

    #[test]
    fn k5_and_k33_witnesses() {
        let k5 = g("k5");
        let v = is_planar(&k5);
        assert!(!v.planar && v.verify(&k5));
        match &v.certificate {
            PlanarityCertificate::Kuratowski(w) => {
                assert_eq!(w.kind, KuratowskiKind::K5);
                assert_eq!(w.edges.len(), 10);
            }
            _ => panic!(),
        }
        let k33 = g("k3,3");
        let v = is_planar(&k33);
        assert!(!v.planar && v.verify(&k33));
    }

    #[test]
    fn extremal_families_are_planar() {
        for n in [5, 6, 12, 30, 64] {
            let t = g(&format!("two-apex-cycle:{n}"));
            let v = is_planar(&t);
            assert!(v.planar && v.verify(&t), "n = {n}");
        }
        let h = join(&g("k2"), &LinearForest::new(vec![2, 2, 2]).unwrap().realize().unwrap()).unwrap();
        assert!(is_planar(&h).verify(&h) && planar(&h));
    }

    #[test]
    fn disconnected_and_trees() {
        let forest = LinearForest::new(vec![4, 3, 1]).unwrap().realize().unwrap();
        let v = is_planar(&forest);
        assert!(v.planar && v.verify(&forest));
        let two_k4 = crate::graph::disjoint_union(&g("k4"), &g("k4")).unwrap();
        assert!(is_planar(&two_k4).verify(&two_k4));
    }

    #[test]
    fn subdivided_k33_found() {
        // K3,3 with one edge subdivided by an extra vertex, plus a pendant.
        let mut h = Graph::empty(8).unwrap();
        for a in 0..3 {
            for b in 3..6 {
                if (a, b) != (0, 3) {
                    h.add_edge(a, b);
                }
            }
        }
        h.add_edge(0, 6);
        h.add_edge(6, 3);
        h.add_edge(7, 1);
        let v = is_planar(&h);
        assert!(!v.planar && v.verify(&h));
    }

    #[test]
    fn edge_bounds() {
        assert!(!edge_bound_check(&g("k5")).unwrap());
        assert!(!edge_bound_check(&g("k3,3")).unwrap());
        assert!(edge_bound_check(&g("c6")).unwrap());
        assert!(edge_bound_check(&g("k2")).is_err());
    }

    #[test]
    fn bad_certificates_rejected() {
        let c6 = g("c6");
        let mut r = embed(&c6).unwrap();
        assert!(r.verify(&c6));
        r.rotation[0].pop();
        assert!(!r.verify(&c6));
        let w = KuratowskiWitness {
            kind: KuratowskiKind::K5,
            edges: c6.edges().collect(),
            branch_vertices: vec![],
        };
        assert!(!w.verify(&c6));
    }
}
