//! Simple undirected graphs on at most 64 vertices with one `u64` neighbor row per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A simple undirected graph with vertices `0..n`.
///
/// Adjacency is kept symmetric and loop-free; the edge count is cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded { requested: n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            edges: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and the absence of loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded { requested: n });
        }
        let mut degree_sum = 0usize;
        for (v, &row) in rows.iter().enumerate() {
            if row & !low_mask(n) != 0 {
                return Err(Error::Precondition(format!("row {v} has bits beyond n = {n}")));
            }
            if row & bit(v) != 0 {
                return Err(Error::Precondition(format!("loop at vertex {v}")));
            }
            for u in bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::Precondition(format!("asymmetric pair ({v}, {u})")));
                }
            }
            degree_sum += row.count_ones() as usize;
        }
        Ok(Graph {
            n,
            adj: rows,
            edges: degree_sum / 2,
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    /// Adds `uv`; returns false if it was already present. Panics on loops or bad indices.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u}, {v}) on n = {}", self.n);
        if self.has_edge(u, v) {
            return false;
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        self.edges += 1;
        true
    }

    /// Removes `uv`; returns false if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return false;
        }
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        self.edges -= 1;
        true
    }

    /// Removes every edge incident with `v`.
    pub fn isolate(&mut self, v: usize) {
        for u in bits(self.adj[v]) {
            self.adj[u] &= !bit(v);
        }
        self.edges -= self.adj[v].count_ones() as usize;
        self.adj[v] = 0;
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Non-edges `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertex_mask();
        (0..self.n).flat_map(move |u| {
            bits(!self.adj[u] & all & !low_mask(u + 1)).map(move |v| (u, v))
        })
    }

    /// Degrees sorted in nonincreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = self.reach(s, self.vertex_mask());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `within`.
    pub fn reach(&self, s: usize, within: u64) -> u64 {
        let mut comp = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Two-colorability test.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Subgraph induced on `mask`, with vertices relabeled in increasing order.
    /// Also returns the original label of each new vertex.
    pub fn induced(&self, mask: u64) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let rows = verts
            .iter()
            .map(|&v| {
                bits(self.adj[v] & mask).fold(0u64, |acc, u| acc | bit(index[u]))
            })
            .collect();
        (
            Graph::from_rows(rows).expect("induced subgraph is a valid graph"),
            verts,
        )
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            rows[perm[v]] = bits(self.adj[v]).fold(0u64, |acc, u| acc | bit(perm[u]));
        }
        Graph {
            n: self.n,
            adj: rows,
            edges: self.edges,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// `a + b`: disjoint copies of `a` and `b` with every cross edge added.
/// Vertices of `a` keep their labels; `b` is shifted by `a.n()`.
pub fn join(a: &Graph, b: &Graph) -> Result<Graph> {
    let mut g = disjoint_union(a, b)?;
    let a_mask = a.vertex_mask();
    let b_mask = low_mask(a.n + b.n) & !a_mask;
    for v in 0..a.n {
        g.adj[v] |= b_mask;
    }
    for v in a.n..g.n {
        g.adj[v] |= a_mask;
    }
    g.edges += a.n * b.n;
    Ok(g)
}

/// `a ∪ b` with `b` shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph> {
    let n = a.n + b.n;
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded { requested: n });
    }
    let mut adj = a.adj.clone();
    adj.extend(b.adj.iter().map(|&r| r << a.n));
    Ok(Graph {
        n,
        adj,
        edges: a.edges + b.edges,
    })
}

/// Disjoint union of all `parts`, in order.
pub fn disjoint_union_all<'a>(parts: impl IntoIterator<Item = &'a Graph>) -> Result<Graph> {
    parts
        .into_iter()
        .try_fold(Graph::empty(0)?, |acc, g| disjoint_union(&acc, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_count_matches_rows() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        let sum: u32 = g.rows().iter().map(|r| r.count_ones()).sum();
        assert_eq!(sum as usize, 2 * g.edge_count());
    }

    #[test]
    fn rejects_loops_and_capacity() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 3)]).is_err());
        assert!(Graph::empty(65).is_err());
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
    }

    #[test]
    fn join_and_union_counts() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let j = join(&k2, &p3).unwrap();
        assert_eq!((j.n(), j.edge_count()), (5, 9));
        let u = disjoint_union(&k2, &k2).unwrap();
        assert_eq!((u.n(), u.edge_count()), (4, 2));
        assert!(!u.is_connected());
        assert_eq!(u.components().len(), 2);
        let big = Graph::empty(40).unwrap();
        assert!(join(&big, &big).is_err());
    }

    #[test]
    fn k1_join_i3_is_star() {
        let j = join(&Graph::empty(1).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert_eq!(j.degree_sequence(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn full_width_rows() {
        let mut g = Graph::empty(64).unwrap();
        g.add_edge(0, 63);
        assert!(g.has_edge(63, 0));
        assert_eq!(g.non_edges().count(), 64 * 63 / 2 - 1);
        g.isolate(63);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn induced_relabels() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (h, labels) = c5.induced(0b10110);
        assert_eq!(labels, vec![1, 2, 4]);
        assert_eq!(h.edge_count(), 1);
        assert!(!c5.is_bipartite());
    }
}
