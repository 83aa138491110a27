//! The vertex surgeries `f_v^{V'}` and `f_{v,e}^{V'}` and exact quadratic forms.

use num_traits::Num;

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Rewires `v` to be adjacent to exactly `targets`, and additionally removes
/// `deleted_edge` when given. The vertex set is unchanged.
pub fn transform(
    g: &Graph,
    v: usize,
    targets: &[usize],
    deleted_edge: Option<(usize, usize)>,
) -> Result<Graph> {
    let n = g.n();
    for &x in targets.iter().chain(std::iter::once(&v)) {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if targets.contains(&v) {
        return Err(Error::InvalidSurgery(format!(
            "vertex {v} cannot be one of its own targets"
        )));
    }
    let mut out = g.clone();
    if let Some((a, b)) = deleted_edge {
        if a >= n || b >= n {
            return Err(Error::VertexOutOfRange { vertex: a.max(b), n });
        }
        if a == v || b == v {
            return Err(Error::InvalidSurgery(format!(
                "deleted edge {a}-{b} is incident to {v}"
            )));
        }
        if !g.has_edge(a, b) {
            return Err(Error::InvalidSurgery(format!("{a}-{b} is not an edge")));
        }
        out.remove_edge(a, b);
    }
    out.isolate(v);
    for &t in targets {
        out.add_edge(v, t);
    }
    Ok(out)
}

/// `vᵀ A(g) v`, exact for exact number types.
pub fn quadratic_form<T: Num + Clone>(g: &Graph, v: &[T]) -> Result<T> {
    if v.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: v.len(),
        });
    }
    let two = T::one() + T::one();
    Ok(g.edges().fold(T::zero(), |acc, (a, b)| {
        acc + two.clone() * v[a].clone() * v[b].clone()
    }))
}

/// `vᵀA(g2)v − vᵀA(g)v`, summed over the symmetric difference of the edge sets.
pub fn quadratic_form_delta<T: Num + Clone>(g: &Graph, g2: &Graph, v: &[T]) -> Result<T> {
    if g.n() != g2.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: g2.n(),
        });
    }
    if v.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: v.len(),
        });
    }
    let mut added = T::zero();
    let mut removed = T::zero();
    for a in 0..g.n() {
        let diff = g.row(a) ^ g2.row(a);
        for b in a + 1..g.n() {
            if diff & bit(b) != 0 {
                let term = v[a].clone() * v[b].clone();
                if g2.has_edge(a, b) {
                    added = added + term;
                } else {
                    removed = removed + term;
                }
            }
        }
    }
    Ok((T::one() + T::one()) * (added - removed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;
    use crate::spectral::algebra::{q_frac, q_int, Q};

    fn g(s: &str) -> Graph {
        s.parse::<Family>().unwrap().construct().unwrap()
    }

    #[test]
    fn identity_and_isolation() {
        let c = g("c7");
        let nbrs: Vec<usize> = c.neighbors(3).collect();
        assert_eq!(transform(&c, 3, &nbrs, None).unwrap(), c);
        let t = transform(&c, 3, &[], None).unwrap();
        assert_eq!(t.degree(3), 0);
        assert_eq!(t.edge_count(), 5);
    }

    #[test]
    fn surgery_with_edge_deletion() {
        // x = 0, w = 1 apexes over the cycle 2..; z = 2 with cycle edge u v = 4–5.
        let base = g("two-apex-cycle:10");
        let t = transform(&base, 2, &[0, 1, 4, 5], Some((4, 5))).unwrap();
        assert_eq!(t.degree(2), 4);
        assert!(!t.has_edge(4, 5));
        assert_eq!(t.n(), 10);
    }

    #[test]
    fn surgery_errors() {
        let c = g("c5");
        assert!(matches!(transform(&c, 1, &[1, 2], None), Err(Error::InvalidSurgery(_))));
        assert!(matches!(
            transform(&c, 1, &[3], Some((0, 1))),
            Err(Error::InvalidSurgery(_))
        ));
        assert!(transform(&c, 9, &[], None).is_err());
    }

    #[test]
    fn delta_examples() {
        let c = g("c6");
        let v: Vec<Q> = (1..=6).map(|i| q_frac(i, 7)).collect();
        assert_eq!(quadratic_form_delta(&c, &c, &v).unwrap(), q_int(0));
        // z = 5 isolated first, then attached to x = 0.
        let h = transform(&c, 5, &[], None).unwrap();
        let h2 = transform(&h, 5, &[0], None).unwrap();
        let d = quadratic_form_delta(&h, &h2, &v).unwrap();
        assert_eq!(d, q_int(2) * &v[5] * &v[0]);
        let full = quadratic_form(&h2, &v).unwrap() - quadratic_form(&h, &v).unwrap();
        assert_eq!(d, full);
        assert!(quadratic_form_delta(&c, &g("c5"), &v).is_err());
    }
}
