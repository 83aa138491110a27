mod common;

use proptest::prelude::*;
use spex_core::patterns::{chromatic_number, contains_subgraph, forest_contains, is_free};
use spex_core::{join, Family, Graph, LinearForest};

use common::{all_forests, graph_from_mask, naive_contains};

fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (0..1u64 << m).prop_map(move |mask| graph_from_mask(n, mask))
    })
}

fn forest(max_order: usize) -> impl Strategy<Value = LinearForest> {
    prop::sample::select(all_forests(max_order))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn containment_matches_naive(host in graph(1, 8), pattern in graph(1, 5)) {
        let w = contains_subgraph(&host, &pattern);
        prop_assert_eq!(w.is_present(), naive_contains(&host, &pattern));
        prop_assert!(w.verify(&host, &pattern));
        prop_assert_eq!(is_free(&host, &pattern), !w.is_present());
    }

    #[test]
    fn forest_containment_matches_graphs(a in forest(12), b in forest(12)) {
        let realized = contains_subgraph(&a.realize().unwrap(), &b.realize().unwrap()).is_present();
        prop_assert_eq!(forest_contains(&a, &b), realized);
    }

    #[test]
    fn k2_join_forest_is_four_chromatic(h in forest(10)) {
        prop_assume!(h.edge_count() > 0);
        let g = join(&Family::Complete(2).construct().unwrap(), &h.realize().unwrap()).unwrap();
        prop_assert_eq!(chromatic_number(&g).unwrap(), 4);
    }
}

#[test]
fn forest_containment_is_transitive() {
    let all = all_forests(9);
    for a in &all {
        for b in all.iter().filter(|b| forest_contains(a, b)) {
            for c in all.iter().filter(|c| forest_contains(b, c)) {
                assert!(forest_contains(a, c), "{a} {b} {c}");
            }
        }
    }
}
