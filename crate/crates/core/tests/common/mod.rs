//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use maxplus_walk::matrix::MaxMatrix;
use maxplus_walk::walk::Coin;
use maxplus_walk::MaxScalar;
use num_rational::Rational64;
use proptest::prelude::*;

pub type Entry = Option<i64>;
pub type Grid = Vec<Vec<Entry>>;

pub fn to_grid(m: &MaxMatrix<i64>) -> Grid {
    m.to_rows()
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.value()).collect())
        .collect()
}

pub fn from_grid(g: &Grid) -> MaxMatrix<i64> {
    MaxMatrix::from_rows(
        g.iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.map_or(MaxScalar::Epsilon, MaxScalar::Finite))
                    .collect()
            })
            .collect(),
    )
    .unwrap()
}

fn better(best: Entry, candidate: Entry) -> Entry {
    match (best, candidate) {
        (None, c) => c,
        (b, None) => b,
        (Some(b), Some(c)) => Some(b.max(c)),
    }
}

/// Heaviest walk of exactly `len` edges from `from` to `to`, by enumeration.
pub fn heaviest_walk(g: &Grid, from: usize, to: usize, len: usize) -> Entry {
    if len == 0 {
        return if from == to { Some(0) } else { None };
    }
    let mut best = None;
    for (next, w) in g[from].iter().enumerate() {
        if let Some(w) = w {
            if let Some(rest) = heaviest_walk(g, next, to, len - 1) {
                best = better(best, Some(w + rest));
            }
        }
    }
    best
}

pub fn power_by_walks(g: &Grid, m: usize) -> Grid {
    let n = g.len();
    (0..n)
        .map(|i| (0..n).map(|j| heaviest_walk(g, i, j, m)).collect())
        .collect()
}

/// `I ⊕ A ⊕ ... ⊕ A^(n-1)` by walk enumeration; valid when no circuit is positive.
pub fn star_by_walks(g: &Grid) -> Grid {
    let n = g.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(None, |acc, len| better(acc, heaviest_walk(g, i, j, len))))
                .collect()
        })
        .collect()
}

/// Every elementary circuit as a vertex list starting at its smallest vertex.
pub fn simple_circuits(g: &Grid) -> Vec<Vec<usize>> {
    fn extend(g: &Grid, start: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for (next, w) in g[last].iter().enumerate() {
            if w.is_none() || next < start {
                continue;
            }
            if next == start {
                out.push(path.clone());
            } else if !path.contains(&next) {
                path.push(next);
                extend(g, start, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for start in 0..g.len() {
        extend(g, start, &mut vec![start], &mut out);
    }
    out
}

/// Maximum mean over elementary circuits, `None` when acyclic.
pub fn max_mean_by_circuits(g: &Grid) -> Option<Rational64> {
    simple_circuits(g)
        .into_iter()
        .map(|c| {
            let weight: i64 = (0..c.len())
                .map(|i| g[c[i]][c[(i + 1) % c.len()]].unwrap())
                .sum();
            Rational64::new(weight, c.len() as i64)
        })
        .max()
}

pub fn entry_strategy(lo: i64, hi: i64) -> impl Strategy<Value = Entry> {
    prop_oneof![1 => Just(None), 3 => (lo..=hi).prop_map(Some)]
}

pub fn grid_strategy(max_n: usize) -> impl Strategy<Value = Grid> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(entry_strategy(-9, 9), n), n)
    })
}

pub fn coin_strategy() -> impl Strategy<Value = Coin<i64>> {
    (-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9).prop_map(|(a, b, c, d)| Coin::new(a, b, c, d))
}

pub fn condition_a_strategy() -> impl Strategy<Value = Coin<i64>> {
    (-9i64..=9, -9i64..=9).prop_map(|(a, b)| Coin::condition_a(a, b))
}

type M2 = [[Entry; 2]; 2];

fn mul2(x: &M2, y: &M2) -> M2 {
    let mut out = [[None; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                if let (Some(p), Some(q)) = (x[i][l], y[l][j]) {
                    out[i][j] = better(out[i][j], Some(p + q));
                }
            }
        }
    }
    out
}

/// `A_k^n` as the maximum over all `2^n` move sequences ending at `k`
/// of the ordered product of step matrices.
pub fn sdm_by_move_sequences(coin: &Coin<i64>, n: usize, k: i64) -> Grid {
    let Coin { a, b, c, d } = *coin;
    let p: M2 = [[Some(a), Some(b)], [None, None]];
    let q: M2 = [[None, None], [Some(c), Some(d)]];
    let mut best: M2 = [[None; 2]; 2];
    for mask in 0u32..(1 << n) {
        let rights = mask.count_ones() as i64;
        if rights - (n as i64 - rights) != k {
            continue;
        }
        let mut acc: M2 = [[Some(0), None], [None, Some(0)]];
        for step in 0..n {
            let m = if mask >> step & 1 == 1 { &q } else { &p };
            acc = mul2(m, &acc);
        }
        for i in 0..2 {
            for j in 0..2 {
                best[i][j] = better(best[i][j], acc[i][j]);
            }
        }
    }
    best.iter().map(|r| r.to_vec()).collect()
}

/// Square grid of order `n` with entries in `[-9, 9]` and roughly one in four `ε`.
pub fn random_grid<R: rand::Rng>(rng: &mut R, n: usize) -> Grid {
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.gen_range(0..4) == 0 {
                        None
                    } else {
                        Some(rng.gen_range(-9..=9))
                    }
                })
                .collect()
        })
        .collect()
}

/// Rescales `g` so its largest circuit mean is zero: `q·A - p` for mean `p/q`.
pub fn zero_mean(g: &Grid) -> Option<Grid> {
    let lambda = max_mean_by_circuits(g)?;
    let (p, q) = (*lambda.numer(), *lambda.denom());
    Some(
        g.iter()
            .map(|row| row.iter().map(|x| x.map(|v| q * v - p)).collect())
            .collect(),
    )
}
