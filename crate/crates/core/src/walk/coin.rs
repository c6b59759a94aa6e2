use std::fmt;

use crate::matrix::MaxMatrix;
use crate::scalar::{MaxScalar, Numeric};

/// The four finite walk parameters.
///
/// Left moves are weighted by `P = [[a, b], [ε, ε]]` and right moves by
/// `Q = [[ε, ε], [c, d]]`; `R = [[c, d], [ε, ε]]` and `S = [[ε, ε], [a, b]]`
/// close the product table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Coin<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

/// One of the four rank-one matrices spanned by a coin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    P,
    Q,
    R,
    S,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::P, Basis::Q, Basis::R, Basis::S];
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Basis::P => "P",
            Basis::Q => "Q",
            Basis::R => "R",
            Basis::S => "S",
        };
        f.write_str(s)
    }
}

fn upper<T: Numeric>(x: T, y: T) -> MaxMatrix<T> {
    MaxMatrix::new(
        2,
        2,
        vec![
            MaxScalar::Finite(x),
            MaxScalar::Finite(y),
            MaxScalar::Epsilon,
            MaxScalar::Epsilon,
        ],
    )
    .expect("2x2")
}

fn lower<T: Numeric>(x: T, y: T) -> MaxMatrix<T> {
    MaxMatrix::new(
        2,
        2,
        vec![
            MaxScalar::Epsilon,
            MaxScalar::Epsilon,
            MaxScalar::Finite(x),
            MaxScalar::Finite(y),
        ],
    )
    .expect("2x2")
}

impl<T: Numeric> Coin<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Coin { a, b, c, d }
    }

    pub fn p(&self) -> MaxMatrix<T> {
        upper(self.a, self.b)
    }

    pub fn q(&self) -> MaxMatrix<T> {
        lower(self.c, self.d)
    }

    pub fn r(&self) -> MaxMatrix<T> {
        upper(self.c, self.d)
    }

    pub fn s(&self) -> MaxMatrix<T> {
        lower(self.a, self.b)
    }

    /// `H = P ⊕ Q = [[a, b], [c, d]]`.
    pub fn h(&self) -> MaxMatrix<T> {
        self.p().oplus(&self.q()).expect("2x2")
    }

    pub fn basis(&self, which: Basis) -> MaxMatrix<T> {
        match which {
            Basis::P => self.p(),
            Basis::Q => self.q(),
            Basis::R => self.r(),
            Basis::S => self.s(),
        }
    }

    /// `Δ = (b + c) - (a + d)`.
    pub fn delta(&self) -> T {
        (self.b + self.c) - (self.a + self.d)
    }

    /// Condition (A): `a + d = 0` and `b + c = 0`.
    pub fn satisfies_condition_a(&self) -> bool {
        (self.a + self.d).is_zero_value() && (self.b + self.c).is_zero_value()
    }

    /// The coin determined by `a` and `b` under condition (A): `c = -b`, `d = -a`.
    pub fn condition_a(a: T, b: T) -> Self {
        Coin::new(a, b, -b, -a)
    }

    pub fn map<U: Numeric, F: Fn(T) -> U>(&self, f: F) -> Coin<U> {
        Coin::new(f(self.a), f(self.b), f(self.c), f(self.d))
    }

    /// Table of products: `X ⊗ Y = coeff ⊗ basis`.
    pub fn product_rule(&self, x: Basis, y: Basis) -> (T, Basis) {
        use Basis::*;
        let Coin { a, b, c, d } = *self;
        match (x, y) {
            (P, P) => (a, P),
            (P, Q) => (b, R),
            (P, R) => (a, R),
            (P, S) => (b, P),
            (Q, P) => (c, S),
            (Q, Q) => (d, Q),
            (Q, R) => (c, Q),
            (Q, S) => (d, S),
            (R, P) => (c, P),
            (R, Q) => (d, R),
            (R, R) => (c, R),
            (R, S) => (d, P),
            (S, P) => (a, S),
            (S, Q) => (b, Q),
            (S, R) => (a, Q),
            (S, S) => (b, S),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Coin<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={},b={},c={},d={}", self.a, self.b, self.c, self.d)
    }
}
