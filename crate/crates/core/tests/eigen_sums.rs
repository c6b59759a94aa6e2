mod common;

use common::{coin_strategy, condition_a_strategy};
use maxplus_walk::spectral::max_cycle_mean;
use maxplus_walk::verify::{random_coin_in, seeded_rng, Stratum};
use maxplus_walk::walk::{
    branch_eigenvalue, eigen_sum, eigen_sum_closed_form, position_eigen_sum, positions,
    sdm_eigenvalue, sdm_recursive, Coin,
};
use maxplus_walk::MaxScalar;
use num_rational::Rational64;
use proptest::prelude::*;

fn r(x: i64) -> Rational64 {
    Rational64::from_integer(x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eigenvalue_formula_is_the_max_cycle_mean(coin in coin_strategy(), n in 1usize..=12) {
        let grid = sdm_recursive(&coin, n);
        for k in positions(n) {
            let karp = max_cycle_mean(grid.get(k).unwrap()).unwrap();
            let formula = sdm_eigenvalue(&coin, n, k).unwrap().value;
            prop_assert_eq!(karp, MaxScalar::Finite(formula), "n={} k={}", n, k);
        }
    }

    #[test]
    fn published_expression_differs_only_where_documented(coin in coin_strategy(), n in 1usize..=12) {
        let delta = coin.delta();
        let ni = n as i64;
        for k in positions(n) {
            let truth = sdm_eigenvalue(&coin, n, k).unwrap().value;
            let published = branch_eigenvalue(&coin, n, k).value;
            let expected_gap = if k == 0 && delta > 0 {
                Rational64::new(delta, 2)
            } else if k.abs() == ni && delta < 0 {
                Rational64::new(-delta, 2)
            } else {
                r(0)
            };
            let gap = truth - published;
            prop_assert!(gap == expected_gap || (k.abs() == ni && gap == -expected_gap), "n={} k={} gap={}", n, k, gap);
        }
    }

    #[test]
    fn eigenvalue_under_condition_a_is_linear(coin in condition_a_strategy()) {
        for n in 1..=30usize {
            let grid = sdm_recursive(&coin, n);
            for k in positions(n) {
                prop_assert_eq!(max_cycle_mean(grid.get(k).unwrap()).unwrap(), MaxScalar::Finite(r(-k * coin.a)));
            }
        }
    }

    #[test]
    fn condition_a_conserves_the_sum(coin in condition_a_strategy()) {
        for n in 1..=50 {
            prop_assert_eq!(eigen_sum(&coin, n), r(0));
            prop_assert_eq!(position_eigen_sum(&coin, n), r(0));
        }
    }
}

#[test]
fn stratified_sums_follow_the_closed_forms() {
    let mut rng = seeded_rng(41);
    for stratum in Stratum::ALL {
        for _ in 0..60 {
            let coin = random_coin_in(&mut rng, stratum);
            let sums: Vec<_> = (1..=50).map(|n| eigen_sum(&coin, n)).collect();
            let trace = coin.a + coin.d;
            let delta = coin.delta();
            for (n, sum) in (1..=50i64).zip(&sums) {
                let expected = if delta < 0 {
                    Rational64::new((2 * n + 1) * trace * n + (2 * n + 1) * delta, 2)
                } else {
                    Rational64::new(n * (2 * n + 1) * trace + (n * n - 1) * delta, 2)
                };
                assert_eq!(*sum, expected, "coin {coin} n={n}");
                assert_eq!(eigen_sum_closed_form(&coin, n as usize), expected);
            }
            let constant = sums.windows(2).all(|w| w[0] == w[1]);
            assert_eq!(constant, stratum == Stratum::ConditionA, "coin {coin}");
            let positional: Vec<_> = (1..=50).map(|n| position_eigen_sum(&coin, n)).collect();
            assert_eq!(
                positional.windows(2).all(|w| w[0] == w[1]),
                stratum == Stratum::ConditionA,
                "coin {coin}"
            );
        }
    }
}

#[test]
fn centre_cell_counterexample() {
    let coin = Coin::new(0i64, 1, 1, 0);
    let a02 = sdm_recursive(&coin, 2).get(0).unwrap().clone();
    assert_eq!(max_cycle_mean(&a02).unwrap(), MaxScalar::Finite(r(2)));
    assert_eq!(sdm_eigenvalue(&coin, 2, 0).unwrap().value, r(2));
    assert_eq!(branch_eigenvalue(&coin, 2, 0).value, r(1));
}
