//! Canonical labeling by individualization and refinement.
//!
//! Two graphs receive the same canonical form iff they are isomorphic. The
//! canonical form is the relabeling whose adjacency rows are lexicographically
//! smallest among the leaves of the search tree.

use crate::graph::{bit, bits, Graph};
use crate::graph6;

type Cells = Vec<Vec<usize>>;

fn cell_masks(cells: &Cells) -> Vec<u64> {
    cells
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | bit(v)))
        .collect()
}

/// Splits cells by neighbor counts into every cell until the ordered
/// partition is equitable.
fn refine(g: &Graph, cells: &mut Cells) {
    loop {
        let masks = cell_masks(cells);
        let mut next = Vec::with_capacity(g.n());
        let mut changed = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut sig: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|&m| (g.row(v) & m).count_ones()).collect(), v))
                .collect();
            sig.sort();
            let mut start = 0;
            for i in 1..=sig.len() {
                if i == sig.len() || sig[i].0 != sig[start].0 {
                    next.push(sig[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            changed |= next.last().map(Vec::len) != Some(cell.len());
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn leaf_key(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut label = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        label[v] = i;
    }
    order
        .iter()
        .map(|&v| bits(g.row(v)).fold(0u64, |m, u| m | bit(label[u])))
        .collect()
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Cells) {
        let Some(target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
        else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let key = leaf_key(self.g, &order);
            if self.best.as_ref().is_none_or(|(k, _)| key < *k) {
                self.best = Some((key, order));
            }
            return;
        };
        // Twins in the target cell are exchanged by an automorphism that
        // fixes the partition, so one branch per twin class suffices.
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            let is_twin = tried
                .iter()
                .any(|&u| self.g.row(u) & !bit(v) == self.g.row(v) & !bit(u));
            if is_twin {
                continue;
            }
            tried.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = cells[target].iter().copied().filter(|&u| u != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            refine(self.g, &mut child);
            self.visit(child);
        }
    }
}

/// `labeling[v]` is the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let mut cells: Cells = Vec::new();
    for v in by_degree {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    refine(g, &mut cells);
    let mut search = Search { g, best: None };
    search.visit(cells);
    let (_, order) = search.best.expect("search reaches a leaf");
    let mut labeling = vec![0; n];
    for (i, v) in order.into_iter().enumerate() {
        labeling[v] = i;
    }
    labeling
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

/// graph6 text of the canonical form; equal strings mean isomorphic graphs.
pub fn canonical_graph6(g: &Graph) -> String {
    graph6::encode(&canonical_form(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;

    fn g(s: &str) -> Graph {
        s.parse::<Family>().unwrap().construct().unwrap()
    }

    #[test]
    fn relabelings_agree() {
        let base = g("two-apex-cycle:9");
        let perm = [3, 8, 0, 5, 1, 7, 2, 6, 4];
        assert_eq!(canonical_form(&base), canonical_form(&base.permuted(&perm)));
        let petersen_like = g("k3,3");
        let perm = [5, 4, 3, 2, 1, 0];
        assert_eq!(
            canonical_graph6(&petersen_like),
            canonical_graph6(&petersen_like.permuted(&perm))
        );
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert!(!is_isomorphic(&g("c6"), &crate::graph::disjoint_union(&g("k3"), &g("k3")).unwrap()));
        assert!(!is_isomorphic(&g("p4"), &g("claw")));
        assert!(is_isomorphic(&g("join-k2-forest:3"), &g("k5-e")));
    }
}
