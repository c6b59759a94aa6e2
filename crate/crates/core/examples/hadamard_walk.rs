//! Hadamard quantum walk: probability profile, Frobenius identity and the
//! weak limit of the rescaled position.

use maxplus_walk::qw::{
    frobenius_half_sum, qw_sdm_recursive, symmetric_initial_state, uniform_grid, weak_limit_check,
    QwState, UnitaryCoin,
};
use maxplus_walk::Error;

fn main() -> Result<(), Error> {
    let coin = UnitaryCoin::hadamard();
    let phi = symmetric_initial_state();

    let short = QwState::single_seed(phi).evolve(&coin, 8);
    println!("n = 8, total probability {:.15}", short.total_probability());
    for (k, mu) in short.distribution() {
        if mu > 0.0 {
            println!(
                "{k:>4} {mu:.6} {}",
                "#".repeat((mu * 100.0).round() as usize)
            );
        }
    }

    for n in [1, 5, 20] {
        let grid = qw_sdm_recursive(&coin, n);
        println!(
            "n = {n:>2}: half sum of squared Frobenius norms = {:.12}",
            frobenius_half_sum(&grid)
        );
    }

    let n = 1000;
    let report = weak_limit_check(&coin, &phi, n, &uniform_grid(-0.9, 0.9, 0.3))?;
    println!("\nweak limit at n = {n}");
    println!("{:>6} {:>10} {:>10}", "u", "empirical", "limit");
    for row in &report.rows {
        println!(
            "{:>6.2} {:>10.6} {:>10.6}",
            row.u, row.empirical_cdf, row.limit_cdf
        );
    }
    println!("sup discrepancy {:.2e}", report.sup_discrepancy);
    Ok(())
}
