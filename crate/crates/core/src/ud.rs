//! Ultradiscretization bridge between the positive-weight walk and the
//! max-plus walk.
//!
//! A max-plus coin `(a, b, c, d)` induces the positive weights
//! `e^{a/ε}, e^{b/ε}, e^{c/ε}, e^{d/ε}`. The ordinary `(+, ×)` state-decision
//! recursion over those weights is carried out on `ε·log` values, where `+`
//! becomes the soft maximum `ε·log(e^{x/ε} + e^{y/ε})` and `×` stays `+`.
//! As `ε → 0` the result tends to the max-plus `A_k^n`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::MaxScalar;
use crate::walk::coin::Coin;
use crate::walk::sdm::{positions, sdm_recursive, SdmGrid};

type Soft = MaxScalar<f64>;
type SoftMatrix = [[Soft; 2]; 2];

/// `ε·log(e^{x/ε} + e^{y/ε})`, with `ε` (zero weight) as identity.
pub fn soft_oplus(x: Soft, y: Soft, eps: f64) -> Soft {
    match (x, y) {
        (MaxScalar::Epsilon, v) | (v, MaxScalar::Epsilon) => v,
        (MaxScalar::Finite(x), MaxScalar::Finite(y)) => {
            let hi = x.max(y);
            let lo = x.min(y);
            MaxScalar::Finite(hi + eps * (-(hi - lo) / eps).exp().ln_1p())
        }
    }
}

/// A max-plus coin together with the scale `ε` of its positive weights.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PositiveWeightCoin {
    base: Coin<i64>,
    eps: f64,
}

impl PositiveWeightCoin {
    pub fn new(base: Coin<i64>, eps: f64) -> Result<Self> {
        if !(eps > 0.0 && eps.is_finite()) {
            return Err(Error::Domain(format!("ε must be positive, got {eps}")));
        }
        Ok(PositiveWeightCoin { base, eps })
    }

    pub fn base(&self) -> Coin<i64> {
        self.base
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// The weights `e^{x/ε}` themselves; overflows to `inf` for small `ε`.
    pub fn weights(&self) -> [f64; 4] {
        let Coin { a, b, c, d } = self.base;
        [a, b, c, d].map(|x| (x as f64 / self.eps).exp())
    }

    fn lift(&self, m: &crate::matrix::MaxMatrix<i64>) -> SoftMatrix {
        let mut out = [[Soft::eps(); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = m.get(i, j).map(|v| v as f64);
            }
        }
        out
    }

    fn product(&self, x: &SoftMatrix, y: &SoftMatrix) -> SoftMatrix {
        let mut out = [[Soft::eps(); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = soft_oplus(x[i][0].otimes(y[0][j]), x[i][1].otimes(y[1][j]), self.eps);
            }
        }
        out
    }

    fn sum(&self, x: &SoftMatrix, y: &SoftMatrix) -> SoftMatrix {
        let mut out = *x;
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = soft_oplus(x[i][j], y[i][j], self.eps);
            }
        }
        out
    }

    /// `ε·log` of the positive-weight state-decision matrices at time `n`.
    pub fn soft_sdm(&self, n: usize) -> BTreeMap<i64, SoftMatrix> {
        let p = self.lift(&self.base.p());
        let q = self.lift(&self.base.q());
        let identity = [[Soft::e(), Soft::eps()], [Soft::eps(), Soft::e()]];
        let mut grid = BTreeMap::from([(0i64, identity)]);
        for _ in 0..n {
            let mut next: BTreeMap<i64, SoftMatrix> = BTreeMap::new();
            for (&k, m) in &grid {
                for (target, step) in [(k - 1, &p), (k + 1, &q)] {
                    let term = self.product(step, m);
                    next.entry(target)
                        .and_modify(|acc| *acc = self.sum(acc, &term))
                        .or_insert(term);
                }
            }
            grid = next;
        }
        grid
    }
}

/// One entry of an ultradiscretization comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UdEntry {
    pub k: i64,
    pub row: usize,
    pub col: usize,
    pub soft: MaxScalar<f64>,
    pub exact: MaxScalar<i64>,
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct UdReport {
    pub n: usize,
    pub eps: f64,
    pub entries: Vec<UdEntry>,
    pub max_deviation: f64,
}

impl UdReport {
    /// `ε·(n·log 2 + 4)`.
    pub fn bound(&self) -> f64 {
        self.eps * (self.n as f64 * std::f64::consts::LN_2 + 4.0)
    }

    pub fn within_bound(&self) -> bool {
        self.entries.iter().all(|e| e.deviation <= self.bound())
    }
}

/// Compares `ε·log` of the positive-weight matrices with the max-plus `A_k^n`
/// entrywise. A pattern mismatch (one side `ε`) counts as infinite deviation.
pub fn ultradiscretization_check(base: &Coin<i64>, eps: f64, n: usize) -> Result<UdReport> {
    if n == 0 {
        return Err(Error::Domain(
            "ultradiscretization check needs n >= 1".into(),
        ));
    }
    let weighted = PositiveWeightCoin::new(*base, eps)?;
    let soft = weighted.soft_sdm(n);
    let exact: SdmGrid<i64> = sdm_recursive(base, n);
    let mut entries = Vec::new();
    for k in positions(n) {
        let s = soft.get(&k).copied().unwrap_or([[Soft::eps(); 2]; 2]);
        let x = exact
            .get(k)
            .cloned()
            .unwrap_or_else(|| crate::matrix::MaxMatrix::epsilon(2, 2));
        for (row, srow) in s.iter().enumerate() {
            for (col, &sv) in srow.iter().enumerate() {
                let ev = x.get(row, col);
                let deviation = match (sv, ev) {
                    (MaxScalar::Epsilon, MaxScalar::Epsilon) => 0.0,
                    (MaxScalar::Finite(s), MaxScalar::Finite(e)) => (s - e as f64).abs(),
                    _ => f64::INFINITY,
                };
                entries.push(UdEntry {
                    k,
                    row,
                    col,
                    soft: sv,
                    exact: ev,
                    deviation,
                });
            }
        }
    }
    let max_deviation = entries.iter().map(|e| e.deviation).fold(0.0, f64::max);
    Ok(UdReport {
        n,
        eps,
        entries,
        max_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_term_soft_max() {
        let eps = 1e-3;
        let v = soft_oplus(Soft::finite(1.0), Soft::finite(2.0), eps);
        assert!((v.value().unwrap() - 2.0).abs() <= eps * std::f64::consts::LN_2);
        let tie = soft_oplus(Soft::finite(0.5), Soft::finite(0.5), eps);
        assert!((tie.value().unwrap() - 0.5 - eps * std::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn tiny_eps_does_not_overflow() {
        let coin = Coin::new(1, 2, -2, -1);
        let w = PositiveWeightCoin::new(coin, 1e-3).unwrap();
        assert!(w.weights()[1].is_infinite());
        let report = ultradiscretization_check(&coin, 1e-3, 6).unwrap();
        assert!(report.max_deviation.is_finite());
        assert!(report.max_deviation <= 0.05);
    }

    #[test]
    fn rejects_bad_eps() {
        assert!(PositiveWeightCoin::new(Coin::new(0, 0, 0, 0), 0.0).is_err());
        assert!(PositiveWeightCoin::new(Coin::new(0, 0, 0, 0), -1.0).is_err());
    }

    #[test]
    fn deviation_shrinks_with_eps() {
        let coin = Coin::new(1, 2, -2, -1);
        let coarse = ultradiscretization_check(&coin, 1e-2, 6).unwrap();
        let fine = ultradiscretization_check(&coin, 1e-4, 6).unwrap();
        assert!(fine.max_deviation < coarse.max_deviation);
        for (f, c) in fine.entries.iter().zip(&coarse.entries) {
            assert!(f.deviation <= c.deviation + 1e-12);
        }
    }
}
