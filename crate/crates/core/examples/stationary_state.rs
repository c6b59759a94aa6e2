//! Finite window of the total evolution operator: spectrum and stationary state.

use maxplus_walk::walk::Coin;
use maxplus_walk::window::{
    build_window, stationary_vector, window_eigenvector, window_spectrum, Side,
};
use maxplus_walk::Error;

fn main() -> Result<(), Error> {
    let coin = Coin::condition_a(1i64, 2);
    let radius = 6;
    let window = build_window(&coin, radius)?;
    println!("window order {} for K = {radius}", window.order());
    println!("max cycle mean: {}", window_spectrum(&coin, radius)?);

    let x = window_eigenvector(&coin, radius)?;
    let stationary = stationary_vector(&coin, radius)?;
    println!("{:>4} {:>10} {:>10}", "k", "eigvec", "X_k");
    for k in -(radius as i64)..=radius as i64 {
        for side in [Side::L, Side::R] {
            let i = side as usize;
            println!(
                "{k:>4}{side:?} {:>9} {:>10}",
                x.get(k)[i].to_string(),
                stationary.get(k)[i].to_string()
            );
        }
    }
    let inner = radius - 1;
    match x
        .restrict(inner)
        .proportionality_shift(&stationary.restrict(inner).to_mean())
    {
        Some(kappa) => println!("eigenvector = κ ⊗ X on |k| < K with κ = {kappa}"),
        None => println!("eigenvector is not proportional to X on |k| < K"),
    }
    Ok(())
}
