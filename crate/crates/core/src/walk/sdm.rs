//! State-decision matrices `A_k^n`, defined by `ψ_k^n = A_k^n ⊗ ψ_0^0` for the
//! single-seed walk.
//!
//! Two independent routes are provided: the recursion
//! `A_k^n = (P ⊗ A_{k+1}^{n-1}) ⊕ (Q ⊗ A_{k-1}^{n-1})` from `A_0^0 = I`, and the
//! closed form that groups the `n`-step paths by their first and last move.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::MaxMatrix;
use crate::scalar::{MaxScalar, Numeric};
use crate::walk::coin::{Basis, Coin};

/// Number of left moves `ℓ` and right moves `m` of an `n`-step path ending at `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LrCounts {
    pub left: i64,
    pub right: i64,
}

impl LrCounts {
    /// `ℓ = (n - k) / 2`, `m = (n + k) / 2`; requires `|k| <= n` and `n ≡ k (mod 2)`.
    pub fn new(n: usize, k: i64) -> Result<Self> {
        let ni = n as i64;
        if k.abs() > ni {
            return Err(Error::OutOfRange { n, k });
        }
        if (ni - k).rem_euclid(2) != 0 {
            return Err(Error::Parity { n, k });
        }
        Ok(LrCounts {
            left: (ni - k) / 2,
            right: (ni + k) / 2,
        })
    }
}

/// Grid of state-decision matrices at one time `n`, keyed by position.
#[derive(Clone, Debug, PartialEq)]
pub struct SdmGrid<T> {
    time: usize,
    cells: BTreeMap<i64, MaxMatrix<T>>,
}

impl<T: Numeric> SdmGrid<T> {
    pub fn new(time: usize, cells: BTreeMap<i64, MaxMatrix<T>>) -> Self {
        SdmGrid { time, cells }
    }

    pub fn time(&self) -> usize {
        self.time
    }

    pub fn get(&self, k: i64) -> Option<&MaxMatrix<T>> {
        self.cells.get(&k)
    }

    pub fn cells(&self) -> impl Iterator<Item = (i64, &MaxMatrix<T>)> + '_ {
        self.cells.iter().map(|(k, v)| (*k, v))
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> + '_ {
        self.cells.keys().copied()
    }
}

/// Positions `-n, -n+2, ..., n` reachable at time `n`.
pub fn positions(n: usize) -> impl Iterator<Item = i64> {
    let n = n as i64;
    (0..=n).map(move |j| -n + 2 * j)
}

/// The recursion from `A_0^0 = I_2`, returning every cell at time `n`.
pub fn sdm_recursive<T: Numeric>(coin: &Coin<T>, n: usize) -> SdmGrid<T> {
    sdm_recursive_history(coin, n)
        .pop()
        .expect("history holds time 0..=n")
}

/// Grids for every time `0..=n`.
pub fn sdm_recursive_history<T: Numeric>(coin: &Coin<T>, n: usize) -> Vec<SdmGrid<T>> {
    let p = coin.p();
    let q = coin.q();
    let mut grid = BTreeMap::from([(0i64, MaxMatrix::identity(2))]);
    let mut history = Vec::with_capacity(n + 1);
    history.push(SdmGrid::new(0, grid.clone()));
    for t in 1..=n {
        let mut next = BTreeMap::new();
        for k in positions(t) {
            let from_right = grid.get(&(k + 1)).map(|m| p.otimes(m).expect("2x2"));
            let from_left = grid.get(&(k - 1)).map(|m| q.otimes(m).expect("2x2"));
            let cell = match (from_right, from_left) {
                (Some(x), Some(y)) => x.oplus(&y).expect("2x2"),
                (Some(x), None) | (None, Some(x)) => x,
                (None, None) => MaxMatrix::epsilon(2, 2),
            };
            next.insert(k, cell);
        }
        grid = next;
        history.push(SdmGrid::new(t, grid.clone()));
    }
    history
}

/// `⊕_{r=1}^{upper} coeff(r) ⊗ basis`; an empty range contributes `ℰ`.
fn basis_sum<T: Numeric>(
    coin: &Coin<T>,
    basis: Basis,
    upper: i64,
    coeff: impl Fn(i64) -> T,
) -> MaxMatrix<T> {
    let best = MaxScalar::oplus_all((1..=upper).map(|r| MaxScalar::Finite(coeff(r))));
    coin.basis(basis).scale(best)
}

/// Closed form of `A_k^n`.
///
/// At the light-cone edges `A_{-n}^n = (n-1)a ⊗ P` and `A_n^n = (n-1)d ⊗ Q`.
/// Interior cells are a `⊕` over `r` of `P`, `Q`, `R` and `S` terms whose
/// coefficients depend only on `ℓ`, `m` and `r`. `A_0^0 = I_2`.
pub fn sdm_closed_form<T: Numeric>(coin: &Coin<T>, n: usize, k: i64) -> Result<MaxMatrix<T>> {
    let LrCounts { left: l, right: m } = LrCounts::new(n, k)?;
    let Coin { a, b, c, d } = *coin;
    let ni = n as i64;
    if n == 0 {
        return Ok(MaxMatrix::identity(2));
    }
    if k == -ni {
        return Ok(coin.p().scale(MaxScalar::Finite(a.times(ni - 1))));
    }
    if k == ni {
        return Ok(coin.q().scale(MaxScalar::Finite(d.times(ni - 1))));
    }
    let p_sum = basis_sum(coin, Basis::P, (l - 1).min(m), |r| {
        a.times(l - r - 1) + b.times(r) + c.times(r) + d.times(m - r)
    });
    let q_sum = basis_sum(coin, Basis::Q, l.min(m - 1), |r| {
        a.times(l - r) + b.times(r) + c.times(r) + d.times(m - r - 1)
    });
    let r_sum = basis_sum(coin, Basis::R, l.min(m), |r| {
        a.times(l - r) + b.times(r) + c.times(r - 1) + d.times(m - r)
    });
    let s_sum = basis_sum(coin, Basis::S, l.min(m), |r| {
        a.times(l - r) + b.times(r - 1) + c.times(r) + d.times(m - r)
    });
    Ok(p_sum.oplus(&q_sum)?.oplus(&r_sum)?.oplus(&s_sum)?)
}

/// Closed-form grid at time `n`.
pub fn sdm_closed_form_grid<T: Numeric>(coin: &Coin<T>, n: usize) -> SdmGrid<T> {
    SdmGrid::new(
        n,
        positions(n)
            .map(|k| (k, sdm_closed_form(coin, n, k).expect("reachable position")))
            .collect(),
    )
}

/// `A_k^n` for a coin satisfying condition (A), where every cell depends on `k` only:
/// `[[na, (n-1)a+b], [ε, ε]]` at `k = -n`, `[[ε, ε], [(-n+1)a-b, -na]]` at `k = n`,
/// and `[[-ka, (-k-1)a+b], [(-k+1)a-b, -ka]]` in between.
pub fn sdm_under_condition_a<T: Numeric>(coin: &Coin<T>, n: usize, k: i64) -> Result<MaxMatrix<T>> {
    require_condition_a(coin)?;
    LrCounts::new(n, k)?;
    let (a, b) = (coin.a, coin.b);
    let ni = n as i64;
    let f = MaxScalar::Finite;
    let eps = MaxScalar::Epsilon;
    let entries = if n == 0 {
        return Ok(MaxMatrix::identity(2));
    } else if k == -ni {
        vec![f(a.times(ni)), f(a.times(ni - 1) + b), eps, eps]
    } else if k == ni {
        vec![eps, eps, f(a.times(1 - ni) - b), f(a.times(-ni))]
    } else {
        vec![
            f(a.times(-k)),
            f(a.times(-k - 1) + b),
            f(a.times(1 - k) - b),
            f(a.times(-k)),
        ]
    };
    MaxMatrix::new(2, 2, entries)
}

pub(crate) fn require_condition_a<T: Numeric>(coin: &Coin<T>) -> Result<()> {
    if coin.satisfies_condition_a() {
        Ok(())
    } else {
        Err(Error::ConditionAViolated {
            a_plus_d: (coin.a + coin.d).to_string(),
            b_plus_c: (coin.b + coin.c).to_string(),
        })
    }
}
