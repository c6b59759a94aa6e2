//! Max-plus walk states and their time evolution.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::MaxMatrix;
use crate::scalar::{MaxScalar, Numeric};
use crate::walk::coin::Coin;

/// Two-component amplitude `[L, R]` at one site.
pub type Amplitude<T> = [MaxScalar<T>; 2];

/// Walk configuration `ψ^n`: a sparse map from position to amplitude.
/// Absent positions carry `[ε, ε]`.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkState<T> {
    time: usize,
    cells: BTreeMap<i64, Amplitude<T>>,
}

fn is_empty_cell<T: Numeric>(cell: &Amplitude<T>) -> bool {
    cell[0].is_eps() && cell[1].is_eps()
}

pub(crate) fn apply2<T: Numeric>(m: &MaxMatrix<T>, x: &Amplitude<T>) -> Amplitude<T> {
    [
        m.get(0, 0).otimes(x[0]).oplus(m.get(0, 1).otimes(x[1])),
        m.get(1, 0).otimes(x[0]).oplus(m.get(1, 1).otimes(x[1])),
    ]
}

impl<T: Numeric> WalkState<T> {
    /// A state at time 0 built from arbitrary cells; all-`ε` cells are dropped.
    pub fn from_cells<I: IntoIterator<Item = (i64, Amplitude<T>)>>(cells: I) -> Self {
        Self::at_time(0, cells)
    }

    pub fn at_time<I: IntoIterator<Item = (i64, Amplitude<T>)>>(time: usize, cells: I) -> Self {
        WalkState {
            time,
            cells: cells
                .into_iter()
                .filter(|(_, c)| !is_empty_cell(c))
                .collect(),
        }
    }

    /// `ψ_0^0 = [α, β]`, `[ε, ε]` elsewhere. At least one of `α`, `β` must be finite.
    pub fn single_seed(alpha: MaxScalar<T>, beta: MaxScalar<T>) -> Result<Self> {
        if alpha.is_eps() && beta.is_eps() {
            return Err(Error::EmptySeed);
        }
        Ok(Self::from_cells([(0, [alpha, beta])]))
    }

    pub fn time(&self) -> usize {
        self.time
    }

    pub fn get(&self, k: i64) -> Amplitude<T> {
        self.cells
            .get(&k)
            .copied()
            .unwrap_or([MaxScalar::Epsilon, MaxScalar::Epsilon])
    }

    /// Positions holding at least one finite component, ascending.
    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.cells.keys().copied()
    }

    pub fn cells(&self) -> impl Iterator<Item = (i64, &Amplitude<T>)> + '_ {
        self.cells.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_all_epsilon(&self) -> bool {
        self.cells.is_empty()
    }

    /// One step: `ψ_k^n = (P ⊗ ψ_{k+1}^{n-1}) ⊕ (Q ⊗ ψ_{k-1}^{n-1})`.
    pub fn step(&self, coin: &Coin<T>) -> Self {
        let p = coin.p();
        let q = coin.q();
        let mut next: BTreeMap<i64, Amplitude<T>> = BTreeMap::new();
        for (&k, cell) in &self.cells {
            for (target, contrib) in [(k - 1, apply2(&p, cell)), (k + 1, apply2(&q, cell))] {
                let slot = next
                    .entry(target)
                    .or_insert([MaxScalar::Epsilon, MaxScalar::Epsilon]);
                slot[0] = slot[0].oplus(contrib[0]);
                slot[1] = slot[1].oplus(contrib[1]);
            }
        }
        next.retain(|_, c| !is_empty_cell(c));
        WalkState {
            time: self.time + 1,
            cells: next,
        }
    }

    /// `steps`-fold [`WalkState::step`]; zero steps returns a copy.
    pub fn evolve(&self, coin: &Coin<T>, steps: usize) -> Self {
        (0..steps).fold(self.clone(), |s, _| s.step(coin))
    }

    pub fn close_to(&self, other: &Self) -> bool {
        let keys: std::collections::BTreeSet<i64> = self
            .cells
            .keys()
            .chain(other.cells.keys())
            .copied()
            .collect();
        keys.into_iter().all(|k| {
            let (x, y) = (self.get(k), other.get(k));
            x[0].close_to(y[0]) && x[1].close_to(y[1])
        })
    }
}

/// Free-function form of [`WalkState::evolve`].
pub fn evolve<T: Numeric>(initial: &WalkState<T>, coin: &Coin<T>, steps: usize) -> WalkState<T> {
    initial.evolve(coin, steps)
}
