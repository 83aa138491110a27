mod common;

use num_rational::Ratio;
use proptest::prelude::*;
use spex_core::patterns::forest_contains;
use spex_core::turan::{classify_spex, exf, pi, SpexPrediction, Trichotomy, TuranTable};
use spex_core::LinearForest;

use common::all_forests;

fn forest(max_order: usize) -> impl Strategy<Value = LinearForest> {
    prop::sample::select(all_forests(max_order).into_iter().filter(|h| h.edge_count() > 0).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witnesses_are_valid_and_values_monotone(h in forest(8)) {
        let table = TuranTable::build(&h, 1..=30).unwrap();
        for row in &table.rows {
            prop_assert!(!forest_contains(&row.witness, &h));
            prop_assert_eq!(row.witness.edge_count(), row.value);
            prop_assert_eq!(row.witness.order(), row.n);
        }
        let values = table.values();
        let from = if h.parts().contains(&1) { h.order() - 1 } else { 0 };
        prop_assert!(values[from..].windows(2).all(|w| w[0] <= w[1]), "{:?}", values);
    }

    #[test]
    fn pi_bounds_are_consistent(h in forest(7)) {
        let v = pi(&h).unwrap();
        prop_assert!(v.lower <= v.upper);
        if let Some(val) = v.value {
            prop_assert!(v.lower <= val && val <= v.upper);
        }
        let half = Ratio::new(1, 2);
        let expected = match v.value {
            Some(x) if x < half => Trichotomy::BelowHalf,
            Some(x) if x == half => Trichotomy::EqualHalf,
            Some(_) => Trichotomy::AboveHalf,
            None => Trichotomy::Uncertified,
        };
        prop_assert_eq!(v.trichotomy, expected);
    }
}

#[test]
fn isolated_parts_break_monotonicity_below_the_pattern_order() {
    let h = LinearForest::new(vec![3, 1, 1]).unwrap();
    assert_eq!(exf(4, &h).unwrap().0, 3);
    assert_eq!(exf(5, &h).unwrap().0, 2);
}

#[test]
fn single_path_values() {
    for k in 4..=6usize {
        let h = LinearForest::new(vec![k]).unwrap();
        for n in 1..=40usize {
            assert_eq!(exf(n, &h).unwrap().0, n - n.div_ceil(k - 1), "k={k} n={n}");
        }
    }
}

#[test]
fn matchings_saturate() {
    for p in 1..=4usize {
        let h = LinearForest::copies(2, p).unwrap();
        let stable = exf(3 * p + 1, &h).unwrap().0;
        for n in 3 * p + 1..=40 {
            assert_eq!(exf(n, &h).unwrap().0, stable, "p={p} n={n}");
        }
    }
}

#[test]
fn classification() {
    let predict = |parts: Vec<usize>| classify_spex(&LinearForest::new(parts).unwrap()).unwrap().prediction;
    assert_eq!(predict(vec![3]), SpexPrediction::TwoApexCycle);
    for p in 1..=4 {
        assert_eq!(predict(vec![2; p]), SpexPrediction::TwoApexCycle);
    }
    for h in all_forests(9).into_iter().filter(|h| h.longest() >= 4) {
        assert_eq!(
            classify_spex(&h).unwrap().prediction,
            SpexPrediction::K2PlusMaximal,
            "{h}"
        );
    }
    assert_eq!(predict(vec![3, 2]), SpexPrediction::Open);
}
