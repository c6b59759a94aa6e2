//! Dense rectangular matrices over `R_max`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{MaxScalar, Numeric};

/// Largest order for which [`MaxMatrix::trop_det`] enumerates permutations.
pub const TROP_DET_MAX_ORDER: usize = 8;

/// A `rows x cols` matrix over `R_max`, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct MaxMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<MaxScalar<T>>,
}

pub type ExactMatrix = MaxMatrix<i64>;
pub type FloatMatrix = MaxMatrix<f64>;

impl<T: Numeric> MaxMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<MaxScalar<T>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        Ok(MaxMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from nested rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<MaxScalar<T>>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::EntryCount {
                    rows: nrows,
                    cols: ncols,
                    expected: ncols,
                    actual: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(nrows, ncols, entries)
    }

    /// The all-`ε` matrix `ℰ`.
    pub fn epsilon(rows: usize, cols: usize) -> Self {
        MaxMatrix {
            rows,
            cols,
            entries: vec![MaxScalar::Epsilon; rows * cols],
        }
    }

    /// `I_n`: `e` on the diagonal, `ε` elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::epsilon(n, n);
        for i in 0..n {
            m.set(i, i, MaxScalar::e());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[MaxScalar<T>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> MaxScalar<T> {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MaxScalar<T>) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[MaxScalar<T>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<MaxScalar<T>> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<MaxScalar<T>>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_all_epsilon(&self) -> bool {
        self.entries.iter().all(|x| x.is_eps())
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn shape_error(&self, op: &'static str, other: &Self) -> Error {
        Error::ShapeMismatch {
            op,
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }

    /// Entrywise `⊕`.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.shape_error("oplus", other));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x.oplus(*y))
            .collect();
        Ok(MaxMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Max-plus product `[A ⊗ B]_ij = ⊕_k A_ik ⊗ B_kj`.
    ///
    /// `ε` entries of `self` are skipped, so banded left factors are cheap.
    /// The reduction order over `k` is fixed.
    pub fn otimes(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(self.shape_error("otimes", other));
        }
        let mut out = Self::epsilon(self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.entries[i * other.cols..(i + 1) * other.cols];
            for (k, &aik) in self.row(i).iter().enumerate() {
                if aik.is_eps() {
                    continue;
                }
                for (dst, &bkj) in out_row.iter_mut().zip(other.row(k)) {
                    *dst = dst.oplus(aik.otimes(bkj));
                }
            }
        }
        Ok(out)
    }

    /// `A ⊗ x` for a column vector `x`.
    pub fn apply(&self, x: &[MaxScalar<T>]) -> Result<Vec<MaxScalar<T>>> {
        if x.len() != self.cols {
            return Err(Error::ShapeMismatch {
                op: "apply",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: x.len(),
                right_cols: 1,
            });
        }
        Ok((0..self.rows)
            .map(|i| MaxScalar::oplus_all(self.row(i).iter().zip(x).map(|(a, b)| a.otimes(*b))))
            .collect())
    }

    /// `α ⊗ A`.
    pub fn scale(&self, alpha: MaxScalar<T>) -> Self {
        self.map(|x| alpha.otimes(x))
    }

    /// `A^⊗m`; `A^⊗0 = I`.
    pub fn pow(&self, m: usize) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(n);
        for _ in 0..m {
            acc = self.otimes(&acc)?;
        }
        Ok(acc)
    }

    pub fn map<U: Numeric, F: Fn(MaxScalar<T>) -> MaxScalar<U>>(&self, f: F) -> MaxMatrix<U> {
        MaxMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn to_mean(&self) -> MaxMatrix<T::Mean> {
        self.map(MaxScalar::to_mean)
    }

    /// Tropical determinant: `⊕` over permutations `σ` of `⊗_i A_{iσ(i)}`.
    pub fn trop_det(&self) -> Result<MaxScalar<T>> {
        let n = self.require_square()?;
        if n > TROP_DET_MAX_ORDER {
            return Err(Error::DeterminantTooLarge {
                n,
                max: TROP_DET_MAX_ORDER,
            });
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = MaxScalar::Epsilon;
        permute(&mut perm, 0, &mut |p| {
            let term = p
                .iter()
                .enumerate()
                .fold(MaxScalar::e(), |acc, (i, &j)| acc.otimes(self.get(i, j)));
            best = best.oplus(term);
        });
        Ok(best)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(x, y)| x.approx_eq(*y, tol))
    }

    /// Mode-aware equality: exact for integer mode, within the default tolerance for floats.
    pub fn close_to(&self, other: &Self) -> bool {
        self.approx_eq(other, crate::scalar::DEFAULT_TOLERANCE)
    }
}

fn permute<F: FnMut(&[usize])>(perm: &mut [usize], start: usize, visit: &mut F) {
    if start == perm.len() {
        visit(perm);
        return;
    }
    for i in start..perm.len() {
        perm.swap(start, i);
        permute(perm, start + 1, visit);
        perm.swap(start, i);
    }
}

impl<T: Numeric> fmt::Display for MaxMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Shorthand for building exact matrices in tests and examples: `None` is `ε`.
pub fn exact(rows: &[&[Option<i64>]]) -> ExactMatrix {
    MaxMatrix::from_rows(
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.map_or(MaxScalar::Epsilon, MaxScalar::Finite))
                    .collect()
            })
            .collect(),
    )
    .expect("rows of equal length")
}
