mod common;

use common::{
    from_grid, grid_strategy, max_mean_by_circuits, power_by_walks, star_by_walks, to_grid,
    zero_mean,
};
use maxplus_walk::spectral::{eigenvector, is_eigenpair, kleene_star, max_cycle_mean};
use maxplus_walk::{Error, MaxScalar};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn powers_match_walk_enumeration(g in grid_strategy(5), m in 0usize..=4) {
        let a = from_grid(&g);
        prop_assert_eq!(to_grid(&a.pow(m).unwrap()), power_by_walks(&g, m));
    }

    #[test]
    fn star_matches_walk_enumeration(g in grid_strategy(5)) {
        let shifted = zero_mean(&g).unwrap_or(g);
        let a = from_grid(&shifted);
        prop_assert_eq!(to_grid(&kleene_star(&a).unwrap()), star_by_walks(&shifted));
    }

    #[test]
    fn positive_circuit_is_reported(g in grid_strategy(5)) {
        let positive = max_mean_by_circuits(&g).map_or(false, |m| m > 0.into());
        let result = kleene_star(&from_grid(&g));
        prop_assert_eq!(positive, matches!(result, Err(Error::PositiveCircuit { .. })));
    }

    #[test]
    fn max_cycle_mean_matches_circuit_enumeration(g in grid_strategy(6)) {
        let expected = max_mean_by_circuits(&g).map_or(MaxScalar::Epsilon, MaxScalar::Finite);
        prop_assert_eq!(max_cycle_mean(&from_grid(&g)).unwrap(), expected);
    }

    #[test]
    fn star_column_is_an_eigenvector(g in grid_strategy(6)) {
        let a = from_grid(&g);
        let lambda = max_cycle_mean(&a).unwrap();
        prop_assume!(lambda.is_finite());
        let x = eigenvector(&a, lambda).unwrap();
        prop_assert!(x.iter().any(|v| v.is_finite()));
        prop_assert!(is_eigenpair(&a, lambda, &x).unwrap());
    }
}
