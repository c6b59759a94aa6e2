//! The max-plus walk and its state-decision matrices.

use maxplus_walk::walk::{positions, sdm_closed_form, sdm_recursive, Coin, WalkState};
use maxplus_walk::{Error, MaxScalar};

fn main() -> Result<(), Error> {
    let coin = Coin::new(1i64, 2, 3, 4);
    println!("coin {coin}");
    println!("P =\n{}Q =\n{}", coin.p(), coin.q());

    let n = 3;
    let grid = sdm_recursive(&coin, n);
    for k in positions(n) {
        let closed = sdm_closed_form(&coin, n, k)?;
        println!(
            "A_{k}^{n} =\n{closed}  (recursion agrees: {})",
            grid.get(k) == Some(&closed)
        );
    }

    // ψ_k^n = A_k^n ⊗ ψ_0^0
    let seed = WalkState::single_seed(MaxScalar::finite(0), MaxScalar::finite(-1))?;
    let state = seed.evolve(&coin, n);
    for (k, psi) in state.cells() {
        println!("ψ_{k}^{n} = [{}, {}]", psi[0], psi[1]);
    }
    Ok(())
}
