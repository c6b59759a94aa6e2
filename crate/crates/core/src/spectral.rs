//! Kleene star, maximum cycle mean and eigenvectors of square max-plus matrices.
//!
//! For an irreducible `A` the unique eigenvalue is the maximum average circuit
//! weight `λ`, and every column of `((-λ) ⊗ A)*` indexed by a vertex on a
//! critical circuit is an eigenvector.

use crate::digraph::WeightedDigraph;
use crate::error::{Error, Result};
use crate::matrix::MaxMatrix;
use crate::scalar::{MaxScalar, Numeric};

fn square_order<T: Numeric>(a: &MaxMatrix<T>) -> Result<usize> {
    if a.is_square() {
        Ok(a.rows())
    } else {
        Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

fn is_positive<T: Numeric>(x: MaxScalar<T>) -> bool {
    match x {
        MaxScalar::Finite(v) => v > T::zero() && !v.is_zero_value(),
        MaxScalar::Epsilon => false,
    }
}

/// `A⁺ = A ⊕ A^⊗2 ⊕ ...`, the maximum weight over all paths of length ≥ 1.
///
/// Computed by the Floyd-Warshall closure; fails with
/// [`Error::PositiveCircuit`] when some circuit has positive weight.
pub fn kleene_plus<T: Numeric>(a: &MaxMatrix<T>) -> Result<MaxMatrix<T>> {
    let n = square_order(a)?;
    let mut d = a.clone();
    for k in 0..n {
        for i in 0..n {
            let dik = d.get(i, k);
            if dik.is_eps() {
                continue;
            }
            for j in 0..n {
                let via = dik.otimes(d.get(k, j));
                let cur = d.get(i, j);
                if via > cur {
                    d.set(i, j, via);
                }
            }
        }
        if let Some(v) = (0..n).find(|&v| is_positive(d.get(v, v))) {
            return Err(Error::PositiveCircuit { vertex: v });
        }
    }
    Ok(d)
}

/// `A* = I ⊕ A ⊕ A^⊗2 ⊕ ... ⊕ A^⊗(n-1)`: entry `(i, j)` is the maximum weight
/// of an `i -> j` path of any length, `ε` if there is none.
pub fn kleene_star<T: Numeric>(a: &MaxMatrix<T>) -> Result<MaxMatrix<T>> {
    let n = square_order(a)?;
    let plus = kleene_plus(a)?;
    plus.oplus(&MaxMatrix::identity(n))
}

/// Karp's algorithm on one strongly connected vertex set: the maximum mean
/// over circuits inside `component`.
fn karp<T: Numeric>(a: &MaxMatrix<T>, component: &[usize]) -> MaxScalar<T::Mean> {
    let s = component.len();
    // walk[k][v]: maximum weight of a k-edge walk from component[0] to component[v].
    let mut walk = vec![vec![MaxScalar::<T>::Epsilon; s]; s + 1];
    walk[0][0] = MaxScalar::e();
    for k in 1..=s {
        for v in 0..s {
            let best = MaxScalar::oplus_all(
                (0..s).map(|u| walk[k - 1][u].otimes(a.get(component[u], component[v]))),
            );
            walk[k][v] = best;
        }
    }
    let mut lambda = MaxScalar::Epsilon;
    for v in 0..s {
        let MaxScalar::Finite(last) = walk[s][v] else {
            continue;
        };
        let worst = (0..s)
            .filter_map(|k| walk[k][v].value().map(|dk| T::mean(last - dk, s - k)))
            .fold(None, |acc: Option<T::Mean>, x| {
                Some(acc.map_or(x, |m| m.min_of(x)))
            });
        if let Some(w) = worst {
            lambda = lambda.oplus(MaxScalar::Finite(w));
        }
    }
    lambda
}

/// Maximum cycle mean of each strongly connected component that carries a
/// circuit, as `(component, value)` pairs.
pub fn max_cycle_mean_per_component<T: Numeric>(
    a: &MaxMatrix<T>,
) -> Result<Vec<(Vec<usize>, MaxScalar<T::Mean>)>> {
    let graph = WeightedDigraph::from_matrix(a)?;
    Ok(graph
        .strongly_connected_components()
        .into_iter()
        .filter(|c| c.len() > 1 || a.get(c[0], c[0]).is_finite())
        .map(|c| {
            let value = karp(a, &c);
            (c, value)
        })
        .collect())
}

/// Maximum average circuit weight of `G(A)`; `ε` if the graph has no circuit.
///
/// For a strongly connected `A` this is the unique eigenvalue. Otherwise it is
/// the largest per-component value.
pub fn max_cycle_mean<T: Numeric>(a: &MaxMatrix<T>) -> Result<MaxScalar<T::Mean>> {
    Ok(MaxScalar::oplus_all(
        max_cycle_mean_per_component(a)?.into_iter().map(|(_, v)| v),
    ))
}

/// `(-λ) ⊗ A`, lifted to the mean type.
pub fn normalize<T: Numeric>(
    a: &MaxMatrix<T>,
    lambda: MaxScalar<T::Mean>,
) -> Result<MaxMatrix<T::Mean>> {
    let shift = lambda.inverse().ok_or(Error::EpsilonEigenvalue)?;
    Ok(a.to_mean().scale(shift))
}

/// Vertices on a critical circuit: those with `[((-λ) ⊗ A)⁺]_ii = e`.
pub fn critical_vertices<T: Numeric>(
    a: &MaxMatrix<T>,
    lambda: MaxScalar<T::Mean>,
) -> Result<Vec<usize>> {
    let plus = kleene_plus(&normalize(a, lambda)?)?;
    Ok((0..plus.rows())
        .filter(|&i| plus.get(i, i).close_to(MaxScalar::e()))
        .collect())
}

/// Column `vertex` of `((-λ) ⊗ A)*`. It is an eigenvector for `λ` whenever
/// `vertex` is critical.
pub fn eigenvector_at<T: Numeric>(
    a: &MaxMatrix<T>,
    lambda: MaxScalar<T::Mean>,
    vertex: usize,
) -> Result<Vec<MaxScalar<T::Mean>>> {
    let star = kleene_star(&normalize(a, lambda)?)?;
    Ok(star.column(vertex))
}

/// An eigenvector for `λ = max_cycle_mean(A)`: the star column of the first
/// critical vertex.
pub fn eigenvector<T: Numeric>(
    a: &MaxMatrix<T>,
    lambda: MaxScalar<T::Mean>,
) -> Result<Vec<MaxScalar<T::Mean>>> {
    let normalized = normalize(a, lambda)?;
    let plus = kleene_plus(&normalized)?;
    let n = plus.rows();
    let vertex = (0..n)
        .find(|&i| plus.get(i, i).close_to(MaxScalar::e()))
        .ok_or_else(|| Error::NoCriticalVertex {
            lambda: lambda.to_string(),
        })?;
    let mut column = plus.column(vertex);
    column[vertex] = column[vertex].oplus(MaxScalar::e());
    Ok(column)
}

/// Checks `A ⊗ x = λ ⊗ x` in the mode's equality.
pub fn is_eigenpair<T: Numeric>(
    a: &MaxMatrix<T>,
    lambda: MaxScalar<T::Mean>,
    x: &[MaxScalar<T::Mean>],
) -> Result<bool> {
    let lhs = a.to_mean().apply(x)?;
    Ok(lhs
        .iter()
        .zip(x)
        .all(|(l, xi)| l.close_to(lambda.otimes(*xi))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::exact;
    use num_rational::Rational64;

    const E: Option<i64> = None;

    fn q(n: i64, d: i64) -> MaxScalar<Rational64> {
        MaxScalar::Finite(Rational64::new(n, d))
    }

    #[test]
    fn star_of_negative_two_cycle() {
        let a = exact(&[&[E, Some(-1)], &[Some(-2), E]]);
        assert_eq!(
            kleene_star(&a).unwrap(),
            exact(&[&[Some(0), Some(-1)], &[Some(-2), Some(0)]])
        );
    }

    #[test]
    fn star_of_edgeless_is_identity() {
        let a = MaxMatrix::<i64>::epsilon(3, 3);
        assert_eq!(kleene_star(&a).unwrap(), MaxMatrix::identity(3));
    }

    #[test]
    fn positive_self_loop_diverges() {
        let a = exact(&[&[Some(1), E], &[Some(0), E]]);
        assert_eq!(kleene_star(&a), Err(Error::PositiveCircuit { vertex: 0 }));
    }

    #[test]
    fn karp_small_cases() {
        assert_eq!(
            max_cycle_mean(&exact(&[&[E, Some(2)], &[Some(3), E]])).unwrap(),
            q(5, 2)
        );
        assert_eq!(max_cycle_mean(&exact(&[&[Some(1)]])).unwrap(), q(1, 1));
        assert_eq!(
            max_cycle_mean(&exact(&[&[E, Some(1)], &[E, E]])).unwrap(),
            MaxScalar::Epsilon
        );
    }

    #[test]
    fn reducible_matrix_takes_best_component() {
        // Two components: a self-loop of weight -1 and a 2-cycle of mean 3.
        let a = exact(&[&[Some(-1), Some(10), E], &[E, E, Some(2)], &[E, Some(4), E]]);
        let parts = max_cycle_mean_per_component(&a).unwrap();
        assert_eq!(parts, vec![(vec![0], q(-1, 1)), (vec![1, 2], q(3, 1))]);
        assert_eq!(max_cycle_mean(&a).unwrap(), q(3, 1));
    }

    #[test]
    fn eigenvector_by_hand() {
        let a = exact(&[&[Some(0), Some(-1)], &[Some(1), Some(0)]]);
        let lambda = max_cycle_mean(&a).unwrap();
        assert_eq!(lambda, q(0, 1));
        let x = eigenvector(&a, lambda).unwrap();
        assert_eq!(x, vec![q(0, 1), q(1, 1)]);
        assert!(is_eigenpair(&a, lambda, &x).unwrap());
    }

    #[test]
    fn scalar_eigenvector() {
        let a = exact(&[&[Some(7)]]);
        let lambda = max_cycle_mean(&a).unwrap();
        assert_eq!(eigenvector(&a, lambda).unwrap(), vec![q(0, 1)]);
    }

    #[test]
    fn epsilon_eigenvalue_rejected() {
        let a = MaxMatrix::<i64>::epsilon(2, 2);
        assert_eq!(
            eigenvector(&a, MaxScalar::Epsilon),
            Err(Error::EpsilonEigenvalue)
        );
    }

    #[test]
    fn float_mode_eigenpair() {
        let a = MaxMatrix::from_rows(vec![
            vec![MaxScalar::Finite(0.1), MaxScalar::Finite(0.7)],
            vec![MaxScalar::Finite(0.2), MaxScalar::Epsilon],
        ])
        .unwrap();
        let lambda = max_cycle_mean(&a).unwrap();
        assert!(lambda.close_to(MaxScalar::Finite(0.45)));
        let x = eigenvector(&a, lambda).unwrap();
        assert!(is_eigenpair(&a, lambda, &x).unwrap());
    }
}
