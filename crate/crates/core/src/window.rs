//! Finite windows of the whole-lattice evolution operator.
//!
//! The operator acting on the stacked state `Ψ^n = [..., ψ_{-1}^n, ψ_0^n, ψ_1^n, ...]`
//! is block-tridiagonal with `P` on the block superdiagonal, `Q` on the block
//! subdiagonal and `ℰ` elsewhere. A window of radius `K` keeps positions
//! `-K..=K` with row/column order `(k;L), (k;R)` for ascending `k`. Rows at the
//! window edge lose a neighbour, so only cells at least one step inside the
//! window reproduce the infinite operator.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::MaxMatrix;
use crate::scalar::{MaxScalar, Numeric};
use crate::spectral;
use crate::walk::coin::Coin;
use crate::walk::sdm::require_condition_a;
use crate::walk::state::{apply2, Amplitude, WalkState};

/// Left or right component of a site.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    L = 0,
    R = 1,
}

/// A radius-`K` truncation of the whole-lattice operator.
#[derive(Clone, Debug, PartialEq)]
pub struct WindowOperator<T> {
    radius: usize,
    matrix: MaxMatrix<T>,
}

impl<T: Numeric> WindowOperator<T> {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn matrix(&self) -> &MaxMatrix<T> {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.matrix.rows()
    }

    /// Row/column index of `(k; side)`.
    pub fn index(&self, k: i64, side: Side) -> usize {
        site_index(self.radius, k, side)
    }

    /// The 2x2 block at block-row `i`, block-column `j`.
    pub fn block(&self, i: i64, j: i64) -> MaxMatrix<T> {
        block_of(&self.matrix, self.radius, i, j)
    }
}

fn site_index(radius: usize, k: i64, side: Side) -> usize {
    2 * (k + radius as i64) as usize + side as usize
}

fn block_of<T: Numeric>(m: &MaxMatrix<T>, radius: usize, i: i64, j: i64) -> MaxMatrix<T> {
    let (r0, c0) = (
        site_index(radius, i, Side::L),
        site_index(radius, j, Side::L),
    );
    MaxMatrix::new(
        2,
        2,
        vec![
            m.get(r0, c0),
            m.get(r0, c0 + 1),
            m.get(r0 + 1, c0),
            m.get(r0 + 1, c0 + 1),
        ],
    )
    .expect("2x2")
}

/// Builds the window of radius `K >= 1`: block `(k, k+1)` is `P`, block
/// `(k, k-1)` is `Q`.
pub fn build_window<T: Numeric>(coin: &Coin<T>, radius: usize) -> Result<WindowOperator<T>> {
    if radius < 1 {
        return Err(Error::WindowRadius { radius, min: 1 });
    }
    let size = 2 * (2 * radius + 1);
    let mut matrix = MaxMatrix::epsilon(size, size);
    let kmax = radius as i64;
    let f = MaxScalar::Finite;
    for k in -kmax..=kmax {
        let l = site_index(radius, k, Side::L);
        let r = site_index(radius, k, Side::R);
        if k < kmax {
            let next = site_index(radius, k + 1, Side::L);
            matrix.set(l, next, f(coin.a));
            matrix.set(l, next + 1, f(coin.b));
        }
        if k > -kmax {
            let prev = site_index(radius, k - 1, Side::L);
            matrix.set(r, prev, f(coin.c));
            matrix.set(r, prev + 1, f(coin.d));
        }
    }
    Ok(WindowOperator { radius, matrix })
}

/// Blocks of the `n`-th power of the window at block positions `(i, j)` with
/// `|i|, |j| <= K - n`, where the truncation cannot be felt.
pub fn window_power_blocks<T: Numeric>(
    coin: &Coin<T>,
    radius: usize,
    n: usize,
) -> Result<BTreeMap<(i64, i64), MaxMatrix<T>>> {
    let window = build_window(coin, radius)?;
    let powers = window_powers(&window, n)?;
    Ok(interior_blocks(&powers[n], radius, n))
}

/// `[I, W, W^⊗2, ..., W^⊗n]` for `n <= K`.
pub fn window_powers<T: Numeric>(
    window: &WindowOperator<T>,
    n: usize,
) -> Result<Vec<MaxMatrix<T>>> {
    if n > window.radius {
        return Err(Error::PowerExceedsWindow {
            n,
            radius: window.radius,
        });
    }
    let mut powers = vec![MaxMatrix::identity(window.order())];
    for _ in 0..n {
        let next = window.matrix.otimes(powers.last().expect("non-empty"))?;
        powers.push(next);
    }
    Ok(powers)
}

/// Interior blocks `|i|, |j| <= K - n` of a window power.
pub fn interior_blocks<T: Numeric>(
    power: &MaxMatrix<T>,
    radius: usize,
    n: usize,
) -> BTreeMap<(i64, i64), MaxMatrix<T>> {
    let inner = radius as i64 - n as i64;
    let mut out = BTreeMap::new();
    for i in -inner..=inner {
        for j in -inner..=inner {
            out.insert((i, j), block_of(power, radius, i, j));
        }
    }
    out
}

/// Stacked vector `[X_{-K}; ...; X_K]` of 2-vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct StackedVector<T> {
    radius: usize,
    cells: Vec<Amplitude<T>>,
}

impl<T: Numeric> StackedVector<T> {
    pub fn new(radius: usize, cells: Vec<Amplitude<T>>) -> Result<Self> {
        if cells.len() != 2 * radius + 1 {
            return Err(Error::Domain(format!(
                "expected {} cells for radius {radius}, got {}",
                2 * radius + 1,
                cells.len()
            )));
        }
        Ok(StackedVector { radius, cells })
    }

    /// Reads an interleaved column `[(−K;L), (−K;R), ...]`.
    pub fn from_column(radius: usize, column: &[MaxScalar<T>]) -> Result<Self> {
        if column.len() != 2 * (2 * radius + 1) {
            return Err(Error::Domain(format!(
                "column of length {} does not fit radius {radius}",
                column.len()
            )));
        }
        Ok(StackedVector {
            radius,
            cells: column.chunks(2).map(|c| [c[0], c[1]]).collect(),
        })
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn get(&self, k: i64) -> Amplitude<T> {
        self.cells[(k + self.radius as i64) as usize]
    }

    pub fn to_column(&self) -> Vec<MaxScalar<T>> {
        self.cells.iter().flat_map(|c| c.iter().copied()).collect()
    }

    pub fn to_walk_state(&self) -> WalkState<T> {
        let k0 = -(self.radius as i64);
        WalkState::from_cells(
            self.cells
                .iter()
                .enumerate()
                .map(|(i, c)| (k0 + i as i64, *c)),
        )
    }

    pub fn from_walk_state(state: &WalkState<T>, radius: usize) -> Self {
        let r = radius as i64;
        StackedVector {
            radius,
            cells: (-r..=r).map(|k| state.get(k)).collect(),
        }
    }

    /// Restriction to positions `|k| <= radius`.
    pub fn restrict(&self, radius: usize) -> Self {
        let r = radius.min(self.radius) as i64;
        StackedVector {
            radius: r as usize,
            cells: (-r..=r).map(|k| self.get(k)).collect(),
        }
    }

    pub fn to_mean(&self) -> StackedVector<T::Mean> {
        StackedVector {
            radius: self.radius,
            cells: self.cells.iter().map(|c| c.map(|x| x.to_mean())).collect(),
        }
    }

    /// `⊗`-proportionality: same `ε` pattern and a single finite shift `κ`
    /// with `self = κ ⊗ other` entrywise. Returns `κ` when it exists.
    pub fn proportionality_shift(&self, other: &Self) -> Option<MaxScalar<T>> {
        if self.radius != other.radius {
            return None;
        }
        let mut shift: Option<T> = None;
        for (x, y) in self.to_column().into_iter().zip(other.to_column()) {
            match (x, y) {
                (MaxScalar::Epsilon, MaxScalar::Epsilon) => {}
                (MaxScalar::Finite(x), MaxScalar::Finite(y)) => {
                    let d = x - y;
                    match shift {
                        None => shift = Some(d),
                        Some(s) if s.close_to(d) => {}
                        Some(_) => return None,
                    }
                }
                _ => return None,
            }
        }
        Some(shift.map_or(MaxScalar::Epsilon, MaxScalar::Finite))
    }

    pub fn is_proportional_to(&self, other: &Self) -> bool {
        self.proportionality_shift(other).is_some()
    }
}

/// `X_k = [-ak, (-k+1)a - b]` for any coin, without checking condition (A).
pub fn stationary_profile<T: Numeric>(coin: &Coin<T>, k: i64) -> Amplitude<T> {
    [
        MaxScalar::Finite(coin.a.times(-k)),
        MaxScalar::Finite(coin.a.times(1 - k) - coin.b),
    ]
}

/// Eigenvector of the whole-lattice operator for eigenvalue 0 under
/// condition (A), restricted to `-K..=K`, with `κ = 0`.
pub fn stationary_vector<T: Numeric>(coin: &Coin<T>, radius: usize) -> Result<StackedVector<T>> {
    require_condition_a(coin)?;
    let r = radius as i64;
    StackedVector::new(
        radius,
        (-r..=r).map(|k| stationary_profile(coin, k)).collect(),
    )
}

/// `(P ⊗ X_{k+1}) ⊕ (Q ⊗ X_{k-1}) = X_k` for the stationary profile, no precondition.
pub fn local_eigen_equation_holds<T: Numeric>(coin: &Coin<T>, k: i64) -> bool {
    let left = apply2(&coin.p(), &stationary_profile(coin, k + 1));
    let right = apply2(&coin.q(), &stationary_profile(coin, k - 1));
    let x = stationary_profile(coin, k);
    left[0].oplus(right[0]).close_to(x[0]) && left[1].oplus(right[1]).close_to(x[1])
}

/// Row-local form of `𝒜 ⊗ v = 0 ⊗ v` at site `k`; requires condition (A).
pub fn verify_local_eigen_equation<T: Numeric>(coin: &Coin<T>, k: i64) -> Result<bool> {
    require_condition_a(coin)?;
    Ok(local_eigen_equation_holds(coin, k))
}

/// Maximum cycle mean of the window, any coin.
pub fn window_max_cycle_mean<T: Numeric>(
    coin: &Coin<T>,
    radius: usize,
) -> Result<MaxScalar<T::Mean>> {
    spectral::max_cycle_mean(build_window(coin, radius)?.matrix())
}

/// Eigenvalue of the window under condition (A).
pub fn window_spectrum<T: Numeric>(coin: &Coin<T>, radius: usize) -> Result<MaxScalar<T::Mean>> {
    require_condition_a(coin)?;
    window_max_cycle_mean(coin, radius)
}

/// An eigenvector of the window for its maximum cycle mean, as a stacked vector.
pub fn window_eigenvector<T: Numeric>(
    coin: &Coin<T>,
    radius: usize,
) -> Result<StackedVector<T::Mean>> {
    let window = build_window(coin, radius)?;
    let lambda = spectral::max_cycle_mean(window.matrix())?;
    let column = spectral::eigenvector(window.matrix(), lambda)?;
    StackedVector::from_column(radius, &column)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::WeightedDigraph;
    use num_rational::Rational64;

    fn f(x: i64) -> MaxScalar<i64> {
        MaxScalar::Finite(x)
    }

    #[test]
    fn radius_one_block_pattern() {
        let coin = Coin::new(1i64, 2, -2, -1);
        let w = build_window(&coin, 1).unwrap();
        assert_eq!(w.order(), 6);
        let eps = MaxMatrix::<i64>::epsilon(2, 2);
        for i in -1..=1i64 {
            for j in -1..=1i64 {
                let expected = match j - i {
                    1 => coin.p(),
                    -1 => coin.q(),
                    _ => eps.clone(),
                };
                assert_eq!(w.block(i, j), expected, "block ({i},{j})");
            }
        }
        assert_eq!(
            w.matrix().get(w.index(-1, Side::L), w.index(0, Side::L)),
            f(1)
        );
    }

    #[test]
    fn window_graph_components() {
        let coin = Coin::new(1i64, 2, -2, -1);
        for radius in 1..6usize {
            let w = build_window(&coin, radius).unwrap();
            let g = WeightedDigraph::from_matrix(w.matrix()).unwrap();
            let sccs = g.strongly_connected_components();
            let k = radius as i64;
            let corner_l = w.index(k, Side::L);
            let corner_r = w.index(-k, Side::R);
            assert_eq!(sccs.len(), 3);
            let big: Vec<&Vec<usize>> = sccs.iter().filter(|c| c.len() > 1).collect();
            assert_eq!(big.len(), 1);
            assert_eq!(big[0].len(), 4 * radius);
            assert!(sccs.contains(&vec![corner_l]));
            assert!(sccs.contains(&vec![corner_r]));
            assert!(!g.is_strongly_connected());
        }
    }

    #[test]
    fn first_power_blocks() {
        let coin = Coin::new(3i64, -1, 4, 0);
        let blocks = window_power_blocks(&coin, 3, 1).unwrap();
        for (&(i, j), m) in &blocks {
            match j - i {
                1 => assert_eq!(m, &coin.p()),
                -1 => assert_eq!(m, &coin.q()),
                _ => assert!(m.is_all_epsilon()),
            }
        }
        assert!(matches!(
            window_power_blocks(&coin, 2, 3),
            Err(Error::PowerExceedsWindow { .. })
        ));
    }

    #[test]
    fn stationary_profile_values() {
        let coin = Coin::condition_a(1i64, 2);
        let x = stationary_vector(&coin, 3).unwrap();
        assert_eq!(x.get(0), [f(0), f(-1)]);
        assert_eq!(x.get(1), [f(-1), f(-2)]);
        // Columns of the interior cells A_k: the first is X_k, the second (-a+b) ⊗ X_k.
        let shift = f(coin.b - coin.a);
        for k in -3..=3i64 {
            let n = 10 + k.rem_euclid(2) as usize;
            let a_k = crate::walk::sdm_under_condition_a(&coin, n, k).unwrap();
            assert_eq!(a_k.column(0), x.get(k).to_vec());
            assert_eq!(a_k.column(1), x.get(k).map(|v| shift.otimes(v)).to_vec());
        }
    }

    #[test]
    fn local_equation() {
        let coin = Coin::condition_a(1i64, 2);
        for k in -10..=10 {
            assert!(verify_local_eigen_equation(&coin, k).unwrap());
        }
        let bad = Coin::new(0i64, 0, 0, 1);
        assert!(!local_eigen_equation_holds(&bad, 0));
        assert!(matches!(
            verify_local_eigen_equation(&bad, 0),
            Err(Error::ConditionAViolated { .. })
        ));
    }

    #[test]
    fn spectrum_under_condition_a() {
        let coin = Coin::condition_a(2i64, -3);
        for radius in [1, 3, 10] {
            assert_eq!(
                window_spectrum(&coin, radius).unwrap(),
                MaxScalar::Finite(Rational64::from(0))
            );
        }
        assert!(window_spectrum(&Coin::new(1i64, 0, 0, 1), 2).is_err());
    }

    #[test]
    fn proportionality() {
        let x = StackedVector::new(
            1,
            vec![[f(0), f(1)], [f(2), MaxScalar::Epsilon], [f(-1), f(0)]],
        )
        .unwrap();
        let y = StackedVector::new(
            1,
            vec![[f(3), f(4)], [f(5), MaxScalar::Epsilon], [f(2), f(3)]],
        )
        .unwrap();
        assert_eq!(y.proportionality_shift(&x), Some(f(3)));
        let z = StackedVector::new(1, vec![[f(3), f(4)], [f(5), f(0)], [f(2), f(3)]]).unwrap();
        assert!(!z.is_proportional_to(&x));
    }
}
