//! The max-plus walk as the ε → 0 limit of a positive-weight walk.

use maxplus_walk::ud::{ultradiscretization_check, PositiveWeightCoin};
use maxplus_walk::walk::Coin;
use maxplus_walk::Error;

fn main() -> Result<(), Error> {
    let coin = Coin::new(1i64, 2, -2, -1);
    let n = 6;
    println!(
        "weights at ε = 0.5: {:?}",
        PositiveWeightCoin::new(coin, 0.5)?.weights()
    );

    println!("{:>8} {:>14} {:>14}", "ε", "max deviation", "bound");
    for eps in [1.0, 1e-1, 1e-2, 1e-3, 1e-4] {
        let report = ultradiscretization_check(&coin, eps, n)?;
        println!(
            "{eps:>8} {:>14.3e} {:>14.3e}",
            report.max_deviation,
            report.bound()
        );
    }

    let report = ultradiscretization_check(&coin, 1e-3, n)?;
    println!("\nentries of A_k^{n} at ε = 1e-3 (k = 0):");
    for e in report.entries.iter().filter(|e| e.k == 0) {
        println!("  [{}][{}] soft {} exact {}", e.row, e.col, e.soft, e.exact);
    }
    Ok(())
}
