//! Eigenvalues of the state-decision matrices and their sum over positions.
//!
//! With `Δ = (b+c) - (a+d)`, every interior `A_k^n` factors as
//! `(ℓa + md) ⊗ M` where `M` depends on `Δ` and `min(ℓ, m)`; the eigenvalue of
//! a 2x2 max-plus matrix is `max(m11, m22, (m12 + m21) / 2)`.

use crate::error::Result;
use crate::scalar::{MaxScalar, Numeric};
use crate::walk::coin::Coin;
use crate::walk::sdm::{positions, LrCounts};

/// Which sign regime of `Δ` an eigenvalue came from. `Δ = 0` uses `NonNegative`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    NonNegative,
    Negative,
}

impl Branch {
    pub fn of<T: Numeric>(coin: &Coin<T>) -> Self {
        if coin.delta() < T::zero() && !coin.delta().is_zero_value() {
            Branch::Negative
        } else {
            Branch::NonNegative
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Branch::NonNegative => "delta>=0",
            Branch::Negative => "delta<0",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BranchEigenvalue<M> {
    pub value: M,
    pub branch: Branch,
}

/// `[x] / 2` in the mean type.
fn half<T: Numeric>(x: T) -> T::Mean {
    T::mean(x, 2)
}

/// Eigenvalue `λ(A_k^n)` of the walk's state-decision matrix.
///
/// * `k = -n`: `na`; `k = n`: `nd`.
/// * interior, `Δ < 0`: `ℓa + md + Δ/2`.
/// * interior, `Δ ≥ 0`: `ℓa + md + min(ℓ, m)Δ`.
pub fn sdm_eigenvalue<T: Numeric>(
    coin: &Coin<T>,
    n: usize,
    k: i64,
) -> Result<BranchEigenvalue<T::Mean>> {
    LrCounts::new(n, k)?;
    let ni = n as i64;
    let branch = Branch::of(coin);
    let value = if n > 0 && k == -ni {
        coin.a.times(ni).to_mean()
    } else if n > 0 && k == ni {
        coin.d.times(ni).to_mean()
    } else {
        let base = coin.a.times(ni - k) + coin.d.times(ni + k);
        match branch {
            Branch::Negative => half(base + coin.delta()),
            Branch::NonNegative => half(base + coin.delta().times(ni - k.abs())),
        }
    };
    Ok(BranchEigenvalue { value, branch })
}

/// The two-branch expression `ℓa + md + min{ℓ, m, (ℓ+m-1)/2}Δ` (`Δ ≥ 0`) or
/// `ℓa + md + Δ/2` (`Δ < 0`) evaluated at any integer `k` with `|k| <= n`.
///
/// `ℓ` and `m` may be half-integers here; this is the summand of [`eigen_sum`].
/// On reachable positions it agrees with [`sdm_eigenvalue`] except at `k = 0`
/// with `Δ > 0` (smaller by `Δ/2`) and at `k = ±n` with `Δ < 0` (shifted by `Δ/2`).
pub fn branch_eigenvalue<T: Numeric>(
    coin: &Coin<T>,
    n: usize,
    k: i64,
) -> BranchEigenvalue<T::Mean> {
    let ni = n as i64;
    let branch = Branch::of(coin);
    let base = coin.a.times(ni - k) + coin.d.times(ni + k);
    let value = match branch {
        Branch::Negative => half(base + coin.delta()),
        Branch::NonNegative => {
            let twice_min = (ni - k).min(ni + k).min(ni - 1);
            half(base + coin.delta().times(twice_min))
        }
    };
    BranchEigenvalue { value, branch }
}

/// `Σ_{k=-n}^{n} ` of [`branch_eigenvalue`] over all integers `k` in `[-n, n]`.
pub fn eigen_sum<T: Numeric>(coin: &Coin<T>, n: usize) -> T::Mean {
    let ni = n as i64;
    (-ni..=ni).fold(<T::Mean as Numeric>::zero(), |acc, k| {
        acc + branch_eigenvalue(coin, n, k).value
    })
}

/// Closed forms of [`eigen_sum`]:
/// `½{(2n+1)(a+d)n + (2n+1)Δ}` for `Δ < 0` and `½{n(2n+1)(a+d) + (n²-1)Δ}` for `Δ ≥ 0`.
pub fn eigen_sum_closed_form<T: Numeric>(coin: &Coin<T>, n: usize) -> T::Mean {
    let ni = n as i64;
    let trace = coin.a + coin.d;
    let delta = coin.delta();
    match Branch::of(coin) {
        Branch::Negative => half(trace.times((2 * ni + 1) * ni) + delta.times(2 * ni + 1)),
        Branch::NonNegative => half(trace.times(ni * (2 * ni + 1)) + delta.times(ni * ni - 1)),
    }
}

/// `Σ_k λ(A_k^n)` over the reachable positions `k = -n, -n+2, ..., n`.
pub fn position_eigen_sum<T: Numeric>(coin: &Coin<T>, n: usize) -> T::Mean {
    positions(n).fold(<T::Mean as Numeric>::zero(), |acc, k| {
        acc + sdm_eigenvalue(coin, n, k)
            .expect("reachable position")
            .value
    })
}

/// Outcome of checking condition (A) on a coin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConditionAReport<T> {
    pub satisfied: bool,
    pub a_plus_d: T,
    pub b_plus_c: T,
    /// `tropdet(H) = (a ⊗ d) ⊕ (b ⊗ c)`; equals `e` under condition (A).
    pub tropdet_h: MaxScalar<T>,
}

pub fn check_condition_a<T: Numeric>(coin: &Coin<T>) -> ConditionAReport<T> {
    ConditionAReport {
        satisfied: coin.satisfies_condition_a(),
        a_plus_d: coin.a + coin.d,
        b_plus_c: coin.b + coin.c,
        tropdet_h: coin.h().trop_det().expect("2x2"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::max_cycle_mean;
    use crate::walk::sdm::sdm_closed_form;
    use num_rational::Rational64;

    fn q(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn condition_a_eigenvalues_are_linear() {
        let coin = Coin::condition_a(3i64, -2);
        for n in 1..12 {
            for k in positions(n) {
                let ev = sdm_eigenvalue(&coin, n, k).unwrap();
                assert_eq!(ev.value, q(-k * 3));
                assert_eq!(ev.branch, Branch::NonNegative);
            }
            assert_eq!(position_eigen_sum(&coin, n), q(0));
            assert_eq!(eigen_sum(&coin, n), q(0));
        }
    }

    #[test]
    fn light_cone_edges() {
        let coin = Coin::new(4i64, 1, -3, 2);
        assert_eq!(sdm_eigenvalue(&coin, 5, -5).unwrap().value, q(20));
        assert_eq!(sdm_eigenvalue(&coin, 5, 5).unwrap().value, q(10));
    }

    #[test]
    fn negative_branch_matches_karp() {
        // Δ = (1 + (-4)) - (2 + 3) = -8
        let coin = Coin::new(2i64, 1, -4, 3);
        let ev = sdm_eigenvalue(&coin, 4, 0).unwrap();
        assert_eq!(ev.branch, Branch::Negative);
        let l = 2;
        let m = 2;
        assert_eq!(ev.value, Rational64::new(2 * (l * 2 + m * 3) - 8, 2));
        let karp = max_cycle_mean(&sdm_closed_form(&coin, 4, 0).unwrap()).unwrap();
        assert_eq!(karp, MaxScalar::Finite(ev.value));
    }

    #[test]
    fn centre_cell_with_positive_delta() {
        // a = d = 0, b = c = 1: A_0^2 = [[2, 1], [1, 2]], eigenvalue 2.
        let coin = Coin::new(0i64, 1, 1, 0);
        let a02 = sdm_closed_form(&coin, 2, 0).unwrap();
        assert_eq!(max_cycle_mean(&a02).unwrap(), MaxScalar::Finite(q(2)));
        assert_eq!(sdm_eigenvalue(&coin, 2, 0).unwrap().value, q(2));
        assert_eq!(branch_eigenvalue(&coin, 2, 0).value, q(1));
    }

    #[test]
    fn closed_forms_of_the_lattice_sum() {
        for coin in [
            Coin::new(2i64, 1, -4, 3),
            Coin::new(0i64, 1, 1, 0),
            Coin::new(1i64, 0, 0, 1),
            Coin::new(-3i64, 5, 2, 1),
        ] {
            for n in 1..20 {
                assert_eq!(
                    eigen_sum(&coin, n),
                    eigen_sum_closed_form(&coin, n),
                    "{coin} n={n}"
                );
            }
        }
    }

    #[test]
    fn condition_a_report() {
        let r = check_condition_a(&Coin::new(1i64, 2, -2, -1));
        assert!(r.satisfied);
        assert_eq!(r.tropdet_h, MaxScalar::Finite(0));

        let r = check_condition_a(&Coin::new(0i64, 1, 1, 0));
        assert!(!r.satisfied);
        assert_eq!(r.b_plus_c, 2);
        assert_eq!(r.tropdet_h, MaxScalar::Finite(2));

        // tropdet(H) = e without condition (A): max(a+d, b+c) = 0 but a+d < 0.
        let r = check_condition_a(&Coin::new(-1i64, 0, 0, 0));
        assert!(!r.satisfied);
        assert_eq!(r.tropdet_h, MaxScalar::Finite(0));
    }
}
