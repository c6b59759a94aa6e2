//! Eigenvalue sums over time: constant exactly when a + d = 0 and b + c = 0.

use maxplus_walk::walk::{check_condition_a, eigen_sum, position_eigen_sum, sdm_eigenvalue, Coin};

fn main() {
    for coin in [
        Coin::new(1i64, 2, -2, -1),
        Coin::new(1i64, 2, -2, 0),
        Coin::new(0i64, 1, 1, 0),
    ] {
        let report = check_condition_a(&coin);
        println!(
            "coin {coin}: a+d = {}, b+c = {}, condition A: {}",
            report.a_plus_d, report.b_plus_c, report.satisfied
        );
        let sums: Vec<String> = (1..=6).map(|n| eigen_sum(&coin, n).to_string()).collect();
        let reachable: Vec<String> = (1..=6)
            .map(|n| position_eigen_sum(&coin, n).to_string())
            .collect();
        println!("  lattice sums  n=1..6: {}", sums.join(" "));
        println!("  position sums n=1..6: {}", reachable.join(" "));
        let lambdas: Vec<String> = [-4i64, -2, 0, 2, 4]
            .iter()
            .map(|&k| sdm_eigenvalue(&coin, 4, k).unwrap().value.to_string())
            .collect();
        println!("  λ(A_k^4), k=-4..4: {}", lambdas.join(" "));
    }
}
