mod common;

use proptest::prelude::*;
use spex_core::canon::is_isomorphic;
use spex_core::graph6::{decode, encode};
use spex_core::{disjoint_union, join, Family, Graph, LinearForest};

use common::graph_from_mask;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (0..=u64::MAX).prop_map(move |bits| graph_from_mask(n, if m == 64 { bits } else { bits & ((1 << m) - 1) }))
    })
}

fn big_graph() -> impl Strategy<Value = Graph> {
    (1..=40usize).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn forest() -> impl Strategy<Value = LinearForest> {
    prop::collection::vec(1..=8usize, 1..=6).prop_map(|p| LinearForest::new(p).unwrap())
}

proptest! {
    #[test]
    fn join_edge_count_and_commutativity(a in graph(8), b in graph(8)) {
        let ab = join(&a, &b).unwrap();
        prop_assert_eq!(ab.edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
        prop_assert!(is_isomorphic(&ab, &join(&b, &a).unwrap()));
    }

    #[test]
    fn union_edge_count(a in graph(8), b in graph(8)) {
        let u = disjoint_union(&a, &b).unwrap();
        prop_assert_eq!(u.n(), a.n() + b.n());
        prop_assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
        prop_assert_eq!(u.components().len(), a.components().len() + b.components().len());
    }

    #[test]
    fn realized_forest_edges(f in forest()) {
        let g = f.realize().unwrap();
        prop_assert_eq!(g.edge_count(), f.order() - f.part_count());
        prop_assert!(g.max_degree() <= 2);
        prop_assert_eq!(LinearForest::of_graph(&g), Some(f));
    }

    #[test]
    fn graph6_round_trip_is_identity(g in big_graph()) {
        let back = decode(&encode(&g)).unwrap();
        prop_assert_eq!(back.rows(), g.rows());
    }

    #[test]
    fn two_apex_cycle_apexes(n in 5..=64usize) {
        prop_assume!(n != 6);
        let g = Family::TwoApexCycle(n).construct().unwrap();
        let apexes: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 2).collect();
        prop_assert_eq!(apexes.len(), 2);
        prop_assert!(!g.has_edge(apexes[0], apexes[1]));
    }
}

#[test]
fn two_apex_cycle_on_six_vertices_is_the_octahedron() {
    let g = Family::TwoApexCycle(6).construct().unwrap();
    assert_eq!(g.degree_sequence(), vec![4; 6]);
    assert_eq!(g.edge_count(), 12);
}

#[test]
fn graph6_small_cases() {
    assert_eq!(encode(&Graph::from_edges(2, &[(0, 1)]).unwrap()), "A_");
    let i2 = decode("A?").unwrap();
    assert_eq!((i2.n(), i2.edge_count()), (2, 0));
    let g = Family::TwoApexCycle(10).construct().unwrap();
    assert_eq!(decode(&encode(&g)).unwrap(), g);
}
