//! Discrete-time quantum walk on `Z` with a 2x2 unitary coin, used as the
//! complex-arithmetic reference for the max-plus walk.
//!
//! `φ_k^n = 𝐏 φ_{k+1}^{n-1} + 𝐐 φ_{k-1}^{n-1}` with `𝐏 = |L⟩⟨L|𝐇`, `𝐐 = |R⟩⟨R|𝐇`.
//! All reductions run in ascending-`k` order so results are reproducible.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::walk::sdm::LrCounts;

pub type CMatrix = Matrix2<Complex64>;
pub type CVector = Vector2<Complex64>;

/// Tolerance for unitarity and hypothesis checks.
pub const UNITARY_TOLERANCE: f64 = 1e-9;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// A unitary coin `𝐇 = [[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitaryCoin {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl UnitaryCoin {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let coin = UnitaryCoin { a, b, c, d };
        let row0 = a.norm_sqr() + b.norm_sqr();
        let row1 = c.norm_sqr() + d.norm_sqr();
        let cross = a * c.conj() + b * d.conj();
        if (row0 - 1.0).abs() > UNITARY_TOLERANCE
            || (row1 - 1.0).abs() > UNITARY_TOLERANCE
            || cross.norm() > UNITARY_TOLERANCE
        {
            return Err(Error::NotUnitary(format!(
                "|a|²+|b|² = {row0}, |c|²+|d|² = {row1}, a c̄ + b d̄ = {cross}"
            )));
        }
        Ok(coin)
    }

    /// `(1/√2) [[1, 1], [1, -1]]`.
    pub fn hadamard() -> Self {
        let h = FRAC_1_SQRT_2;
        UnitaryCoin {
            a: c(h),
            b: c(h),
            c: c(h),
            d: c(-h),
        }
    }

    /// Real rotation-reflection `[[cos θ, sin θ], [sin θ, -cos θ]]`.
    pub fn rotation(theta: f64) -> Self {
        let (s, co) = theta.sin_cos();
        UnitaryCoin {
            a: c(co),
            b: c(s),
            c: c(s),
            d: c(-co),
        }
    }

    pub fn h(&self) -> CMatrix {
        CMatrix::new(self.a, self.b, self.c, self.d)
    }

    pub fn p(&self) -> CMatrix {
        CMatrix::new(self.a, self.b, Complex64::ZERO, Complex64::ZERO)
    }

    pub fn q(&self) -> CMatrix {
        CMatrix::new(Complex64::ZERO, Complex64::ZERO, self.c, self.d)
    }

    pub fn r(&self) -> CMatrix {
        CMatrix::new(self.c, self.d, Complex64::ZERO, Complex64::ZERO)
    }

    pub fn s(&self) -> CMatrix {
        CMatrix::new(Complex64::ZERO, Complex64::ZERO, self.a, self.b)
    }

    /// `Δ' = det 𝐇`.
    pub fn determinant(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }
}

/// Quantum walk amplitudes at one time.
#[derive(Clone, Debug, PartialEq)]
pub struct QwState {
    time: usize,
    amplitudes: BTreeMap<i64, CVector>,
}

impl QwState {
    /// `φ_0^0 = φ`, zero elsewhere.
    pub fn single_seed(phi: CVector) -> Self {
        QwState {
            time: 0,
            amplitudes: BTreeMap::from([(0, phi)]),
        }
    }

    pub fn zero() -> Self {
        QwState {
            time: 0,
            amplitudes: BTreeMap::new(),
        }
    }

    pub fn time(&self) -> usize {
        self.time
    }

    pub fn get(&self, k: i64) -> CVector {
        self.amplitudes
            .get(&k)
            .copied()
            .unwrap_or_else(CVector::zeros)
    }

    pub fn amplitudes(&self) -> impl Iterator<Item = (i64, &CVector)> + '_ {
        self.amplitudes.iter().map(|(k, v)| (*k, v))
    }

    pub fn step(&self, coin: &UnitaryCoin) -> Self {
        let p = coin.p();
        let q = coin.q();
        let mut next: BTreeMap<i64, CVector> = BTreeMap::new();
        for (&k, phi) in &self.amplitudes {
            *next.entry(k - 1).or_insert_with(CVector::zeros) += p * phi;
            *next.entry(k + 1).or_insert_with(CVector::zeros) += q * phi;
        }
        QwState {
            time: self.time + 1,
            amplitudes: next,
        }
    }

    pub fn evolve(&self, coin: &UnitaryCoin, steps: usize) -> Self {
        (0..steps).fold(self.clone(), |s, _| s.step(coin))
    }

    /// `μ_k^n = ‖φ_k^n‖²`.
    pub fn distribution(&self) -> BTreeMap<i64, f64> {
        self.amplitudes
            .iter()
            .map(|(k, v)| (*k, v.norm_squared()))
            .collect()
    }

    /// `Σ_k ‖φ_k^n‖²`.
    pub fn total_probability(&self) -> f64 {
        self.amplitudes.values().map(|v| v.norm_squared()).sum()
    }
}

/// Free-function form of [`QwState::step`].
pub fn qw_step(state: &QwState, coin: &UnitaryCoin) -> QwState {
    state.step(coin)
}

/// `μ_k^n` for every occupied site.
pub fn distribution(state: &QwState) -> BTreeMap<i64, f64> {
    state.distribution()
}

/// State-decision matrices `𝐀_k^n` at time `n` by recursion from `𝐀_0^0 = I`.
pub fn qw_sdm_recursive(coin: &UnitaryCoin, n: usize) -> BTreeMap<i64, CMatrix> {
    let p = coin.p();
    let q = coin.q();
    let mut grid = BTreeMap::from([(0i64, CMatrix::identity())]);
    for _ in 0..n {
        let mut next: BTreeMap<i64, CMatrix> = BTreeMap::new();
        for (&k, m) in &grid {
            *next.entry(k - 1).or_insert_with(CMatrix::zeros) += p * m;
            *next.entry(k + 1).or_insert_with(CMatrix::zeros) += q * m;
        }
        grid = next;
    }
    grid
}

fn binomial(n: i64, k: i64) -> f64 {
    if k < 0 || k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Closed form of `𝐀_k^n`:
/// `a^ℓ d^m Σ_{r=1}^{ℓ∧m} (bc/ad)^r C(ℓ-1, r-1) C(m-1, r-1) [(ℓ-r)/(ar) 𝐏 + (m-r)/(dr) 𝐐 + 𝐑/c + 𝐒/b]`
/// for interior `k`; `𝐚^{n-1} 𝐏` and `𝐝^{n-1} 𝐐` on the light-cone edges.
pub fn qw_sdm_closed_form(coin: &UnitaryCoin, n: usize, k: i64) -> Result<CMatrix> {
    let LrCounts { left: l, right: m } = LrCounts::new(n, k)?;
    let ni = n as i64;
    if n == 0 {
        return Ok(CMatrix::identity());
    }
    if k == -ni {
        return Ok(coin.p() * coin.a.powi((ni - 1) as i32));
    }
    if k == ni {
        return Ok(coin.q() * coin.d.powi((ni - 1) as i32));
    }
    for (name, v) in [("a", coin.a), ("b", coin.b), ("c", coin.c), ("d", coin.d)] {
        if v.norm() <= UNITARY_TOLERANCE {
            return Err(Error::ZeroCoinEntry(name));
        }
    }
    let UnitaryCoin { a, b, c: cc, d } = *coin;
    let ratio = (b * cc) / (a * d);
    let mut sum = CMatrix::zeros();
    for r in 1..=l.min(m) {
        let weight = ratio.powi(r as i32) * binomial(l - 1, r - 1) * binomial(m - 1, r - 1);
        let rf = r as f64;
        let term = coin.p() * ((l - r) as f64 / rf / a)
            + coin.q() * ((m - r) as f64 / rf / d)
            + coin.r() / cc
            + coin.s() / b;
        sum += term * weight;
    }
    Ok(sum * (a.powi(l as i32) * d.powi(m as i32)))
}

/// `½ Σ_k ‖𝐀_k^n‖²_F`, equal to 1 for a unitary coin.
pub fn frobenius_half_sum(grid: &BTreeMap<i64, CMatrix>) -> f64 {
    0.5 * grid.values().map(|m| m.norm_squared()).sum::<f64>()
}

/// Limit density `f_K(v; |a|) = |b| / (π (1 - v²) √(|a|² - v²))` on `(-|a|, |a|)`,
/// `|b| = √(1 - |a|²)`. Returns `+∞` at the singular endpoints `|v| = |a|`.
pub fn konno_density(v: f64, abs_a: f64) -> Result<f64> {
    check_abs_a(abs_a)?;
    let abs_b = (1.0 - abs_a * abs_a).sqrt();
    if v.abs() > abs_a {
        return Ok(0.0);
    }
    if v.abs() == abs_a {
        return Ok(f64::INFINITY);
    }
    Ok(abs_b / (PI * (1.0 - v * v) * (abs_a * abs_a - v * v).sqrt()))
}

/// `∫_{-∞}^u f_K(v; |a|) dv = ½ + (1/π) arctan(|b| tan(arcsin(u/|a|)))` inside the support.
pub fn konno_cdf(u: f64, abs_a: f64) -> Result<f64> {
    check_abs_a(abs_a)?;
    if u <= -abs_a {
        return Ok(0.0);
    }
    if u >= abs_a {
        return Ok(1.0);
    }
    let abs_b = (1.0 - abs_a * abs_a).sqrt();
    let theta = (u / abs_a).asin();
    Ok(0.5 + (abs_b * theta.tan()).atan() / PI)
}

fn check_abs_a(abs_a: f64) -> Result<()> {
    if abs_a > 0.0 && abs_a < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("|a| = {abs_a} must lie in (0, 1)")))
    }
}

/// One grid point of a weak-limit comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeakLimitRow {
    pub u: f64,
    pub empirical_cdf: f64,
    pub limit_cdf: f64,
    pub abs_diff: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeakLimitReport {
    pub n: usize,
    pub rows: Vec<WeakLimitRow>,
    pub sup_discrepancy: f64,
}

/// Rescaled empirical CDF `Σ_{k/n <= u} μ_k^n`.
pub fn empirical_cdf(dist: &BTreeMap<i64, f64>, n: usize, u: f64) -> f64 {
    let cutoff = u * n as f64;
    dist.iter()
        .take_while(|(k, _)| **k as f64 <= cutoff + 1e-9)
        .map(|(_, mu)| *mu)
        .sum()
}

/// Checks `|α| = |β|` and `Re(a α conj(b β)) = 0`.
pub fn check_weak_limit_hypothesis(coin: &UnitaryCoin, phi: &CVector) -> Result<()> {
    let (alpha, beta) = (phi[0], phi[1]);
    if (alpha.norm() - beta.norm()).abs() > UNITARY_TOLERANCE {
        return Err(Error::WeakLimitHypothesis(format!(
            "|α| = {} but |β| = {}",
            alpha.norm(),
            beta.norm()
        )));
    }
    let cross = (coin.a * alpha * (coin.b * beta).conj()).re;
    if cross.abs() > UNITARY_TOLERANCE {
        return Err(Error::WeakLimitHypothesis(format!(
            "Re(a α conj(b β)) = {cross}"
        )));
    }
    Ok(())
}

/// Runs the walk from `φ` for `n` steps and compares the rescaled CDF with the
/// limit CDF at each `u` in `grid`.
pub fn weak_limit_check(
    coin: &UnitaryCoin,
    phi: &CVector,
    n: usize,
    grid: &[f64],
) -> Result<WeakLimitReport> {
    check_weak_limit_hypothesis(coin, phi)?;
    if n == 0 {
        return Err(Error::Domain("weak-limit check needs n >= 1".into()));
    }
    let abs_a = coin.a.norm();
    let dist = QwState::single_seed(*phi).evolve(coin, n).distribution();
    let mut rows = Vec::with_capacity(grid.len());
    for &u in grid {
        let empirical = empirical_cdf(&dist, n, u);
        let limit = konno_cdf(u, abs_a)?;
        rows.push(WeakLimitRow {
            u,
            empirical_cdf: empirical,
            limit_cdf: limit,
            abs_diff: (empirical - limit).abs(),
        });
    }
    let sup = rows.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
    Ok(WeakLimitReport {
        n,
        rows,
        sup_discrepancy: sup,
    })
}

/// `[1/√2, i/√2]`, which satisfies the weak-limit hypothesis for the Hadamard coin.
pub fn symmetric_initial_state() -> CVector {
    CVector::new(c(FRAC_1_SQRT_2), Complex64::new(0.0, FRAC_1_SQRT_2))
}

/// Evenly spaced grid `start, start+step, ..., <= stop`.
pub fn uniform_grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let count = ((stop - start) / step + 1e-9).floor() as usize;
    (0..=count)
        .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12 + 0.0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hadamard_first_step() {
        let coin = UnitaryCoin::hadamard();
        let s = QwState::single_seed(CVector::new(c(1.0), Complex64::ZERO)).step(&coin);
        let h = FRAC_1_SQRT_2;
        assert!((s.get(-1) - CVector::new(c(h), Complex64::ZERO)).norm() < 1e-15);
        assert!((s.get(1) - CVector::new(Complex64::ZERO, c(h))).norm() < 1e-15);
        let mu = s.distribution();
        assert!((mu[&-1] - 0.5).abs() < 1e-15);
        assert!((mu[&1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn zero_state_stays_zero() {
        let s = QwState::zero().evolve(&UnitaryCoin::hadamard(), 10);
        assert_eq!(s.total_probability(), 0.0);
    }

    #[test]
    fn non_unitary_rejected() {
        assert!(UnitaryCoin::new(c(1.0), c(1.0), c(0.0), c(1.0)).is_err());
        let h = UnitaryCoin::hadamard();
        assert!(UnitaryCoin::new(h.a, h.b, h.c, h.d).is_ok());
    }

    #[test]
    fn basis_is_orthogonal() {
        let coin = UnitaryCoin::new(
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.8),
            Complex64::new(0.0, 0.8),
            Complex64::new(0.6, 0.0),
        )
        .unwrap();
        let basis = [coin.p(), coin.q(), coin.r(), coin.s()];
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let ip = (x.adjoint() * y).trace();
                if i == j {
                    assert!(ip.norm() > 0.5);
                } else {
                    assert!(ip.norm() < 1e-12, "{i} {j}");
                }
            }
        }
    }

    #[test]
    fn edge_closed_form() {
        let coin = UnitaryCoin::rotation(0.3);
        for n in 1..12usize {
            let rec = qw_sdm_recursive(&coin, n);
            let ni = n as i64;
            for k in [-ni, ni] {
                let cf = qw_sdm_closed_form(&coin, n, k).unwrap();
                assert!((cf - rec[&k]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn density_values() {
        let a = FRAC_1_SQRT_2;
        assert!((konno_density(0.0, a).unwrap() - 1.0 / PI).abs() < 1e-12);
        assert_eq!(konno_density(0.9, a).unwrap(), 0.0);
        assert_eq!(konno_density(a, a).unwrap(), f64::INFINITY);
        for v in [0.1, 0.3, 0.55, 0.7] {
            assert_eq!(konno_density(v, a).unwrap(), konno_density(-v, a).unwrap());
        }
        assert!(konno_density(0.0, 1.0).is_err());
    }

    #[test]
    fn cdf_limits() {
        let a = 0.6;
        assert_eq!(konno_cdf(-1.0, a).unwrap(), 0.0);
        assert_eq!(konno_cdf(1.0, a).unwrap(), 1.0);
        assert!((konno_cdf(0.0, a).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn hypothesis_check() {
        let coin = UnitaryCoin::hadamard();
        assert!(check_weak_limit_hypothesis(&coin, &symmetric_initial_state()).is_ok());
        let bad = CVector::new(c(1.0), Complex64::ZERO);
        assert!(check_weak_limit_hypothesis(&coin, &bad).is_err());
        let real = CVector::new(c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2));
        assert!(check_weak_limit_hypothesis(&coin, &real).is_err());
    }

    #[test]
    fn grid_endpoints() {
        let g = uniform_grid(-0.6, 0.6, 0.05);
        assert_eq!(g.len(), 25);
        assert!((g[24] - 0.6).abs() < 1e-12);
    }
}
