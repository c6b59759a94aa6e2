//! Elements of the max-plus semiring `R_max = R ∪ {ε}`.
//!
//! Addition `⊕` is `max` and multiplication `⊗` is ordinary `+`. The additive
//! identity `ε` is carried as its own variant rather than a floating `-inf`
//! sentinel, so integer arithmetic stays lossless and `ε ⊗ ε` is unambiguous.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

/// Absolute tolerance used by float-mode comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Ordered additive group backing a [`MaxScalar`].
///
/// Two modes are provided: exact (`i64`, with [`Rational64`] for averages) and
/// float (`f64`, compared within [`DEFAULT_TOLERANCE`]). Mixing modes is a type
/// error.
pub trait Numeric:
    Copy
    + PartialOrd
    + Debug
    + Display
    + FromStr
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Type of circuit averages `w(C) / l(C)`.
    type Mean: Numeric<Mean = Self::Mean>;

    const EXACT: bool;

    fn zero() -> Self;

    fn from_i64(v: i64) -> Self;

    /// `n`-fold sum `self + ... + self` (the max-plus power `self^⊗n`).
    fn times(self, n: i64) -> Self;

    fn mean(sum: Self, len: usize) -> Self::Mean;

    fn to_mean(self) -> Self::Mean;

    fn to_f64(self) -> f64;

    /// Equality in the mode's sense: exact equality, or `|x - y| <= tol` for floats.
    fn approx_eq(self, other: Self, tol: f64) -> bool;

    fn close_to(self, other: Self) -> bool {
        self.approx_eq(other, DEFAULT_TOLERANCE)
    }

    fn is_zero_value(self) -> bool {
        self.close_to(Self::zero())
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl Numeric for i64 {
    type Mean = Rational64;
    const EXACT: bool = true;

    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn times(self, n: i64) -> Self {
        self * n
    }
    fn mean(sum: Self, len: usize) -> Rational64 {
        Rational64::new(sum, len as i64)
    }
    fn to_mean(self) -> Rational64 {
        Rational64::from_integer(self)
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn approx_eq(self, other: Self, _tol: f64) -> bool {
        self == other
    }
}

impl Numeric for Rational64 {
    type Mean = Rational64;
    const EXACT: bool = true;

    fn zero() -> Self {
        <Rational64 as Zero>::zero()
    }
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }
    fn times(self, n: i64) -> Self {
        self * n
    }
    fn mean(sum: Self, len: usize) -> Rational64 {
        sum / len as i64
    }
    fn to_mean(self) -> Rational64 {
        self
    }
    fn to_f64(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
    fn approx_eq(self, other: Self, _tol: f64) -> bool {
        self == other
    }
}

impl Numeric for f64 {
    type Mean = f64;
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn times(self, n: i64) -> Self {
        self * n as f64
    }
    fn mean(sum: Self, len: usize) -> f64 {
        sum / len as f64
    }
    fn to_mean(self) -> f64 {
        self
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn approx_eq(self, other: Self, tol: f64) -> bool {
        (self - other).abs() <= tol
    }
}

/// An element of `R_max`: a finite value or `ε`.
///
/// The derived ordering places `Epsilon` below every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MaxScalar<T> {
    Epsilon,
    Finite(T),
}

pub type ExactScalar = MaxScalar<i64>;
pub type FloatScalar = MaxScalar<f64>;

impl<T: Numeric> MaxScalar<T> {
    pub const fn eps() -> Self {
        MaxScalar::Epsilon
    }

    /// The multiplicative identity `e = 0`.
    pub fn e() -> Self {
        MaxScalar::Finite(T::zero())
    }

    pub fn finite(v: T) -> Self {
        MaxScalar::Finite(v)
    }

    pub fn is_eps(self) -> bool {
        matches!(self, MaxScalar::Epsilon)
    }

    pub fn is_finite(self) -> bool {
        !self.is_eps()
    }

    pub fn value(self) -> Option<T> {
        match self {
            MaxScalar::Finite(v) => Some(v),
            MaxScalar::Epsilon => None,
        }
    }

    /// `self ⊕ other = max(self, other)`.
    pub fn oplus(self, other: Self) -> Self {
        match (self, other) {
            (MaxScalar::Epsilon, y) => y,
            (x, MaxScalar::Epsilon) => x,
            (MaxScalar::Finite(x), MaxScalar::Finite(y)) => MaxScalar::Finite(x.max_of(y)),
        }
    }

    /// `self ⊗ other = self + other`, with `ε` absorbing.
    pub fn otimes(self, other: Self) -> Self {
        match (self, other) {
            (MaxScalar::Finite(x), MaxScalar::Finite(y)) => MaxScalar::Finite(x + y),
            _ => MaxScalar::Epsilon,
        }
    }

    /// `⊗`-inverse `-x`; `ε` has none.
    pub fn inverse(self) -> Option<Self> {
        self.value().map(|v| MaxScalar::Finite(-v))
    }

    /// `⊕` over an iterator; the empty sum is `ε`.
    pub fn oplus_all<I: IntoIterator<Item = Self>>(items: I) -> Self {
        items
            .into_iter()
            .fold(MaxScalar::Epsilon, |acc, x| acc.oplus(x))
    }

    pub fn to_mean(self) -> MaxScalar<T::Mean> {
        self.map(T::to_mean)
    }

    pub fn map<U, F: FnOnce(T) -> U>(self, f: F) -> MaxScalar<U> {
        match self {
            MaxScalar::Finite(v) => MaxScalar::Finite(f(v)),
            MaxScalar::Epsilon => MaxScalar::Epsilon,
        }
    }

    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        match (self, other) {
            (MaxScalar::Epsilon, MaxScalar::Epsilon) => true,
            (MaxScalar::Finite(x), MaxScalar::Finite(y)) => x.approx_eq(y, tol),
            _ => false,
        }
    }

    pub fn close_to(self, other: Self) -> bool {
        self.approx_eq(other, DEFAULT_TOLERANCE)
    }
}

impl<T: Numeric> From<T> for MaxScalar<T> {
    fn from(v: T) -> Self {
        MaxScalar::Finite(v)
    }
}

impl<T: Display> Display for MaxScalar<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxScalar::Finite(v) => write!(f, "{v}"),
            MaxScalar::Epsilon => f.write_str("eps"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type X = MaxScalar<i64>;

    #[test]
    fn oplus_is_max() {
        assert_eq!(X::finite(2).oplus(X::finite(3)), X::finite(3));
        assert_eq!(X::eps().oplus(X::finite(5)), X::finite(5));
        assert_eq!(X::eps().oplus(X::eps()), X::eps());
    }

    #[test]
    fn otimes_is_plus() {
        assert_eq!(X::finite(2).otimes(X::finite(3)), X::finite(5));
        assert_eq!(X::eps().otimes(X::finite(5)), X::eps());
        assert_eq!(X::e().otimes(X::finite(-7)), X::finite(-7));
    }

    #[test]
    fn epsilon_is_smallest() {
        assert!(X::eps() < X::finite(i64::MIN));
        assert!(MaxScalar::<f64>::eps() < MaxScalar::finite(f64::MIN));
    }

    #[test]
    fn empty_oplus_is_epsilon() {
        assert_eq!(X::oplus_all(std::iter::empty()), X::eps());
    }

    #[test]
    fn exact_means_are_rational() {
        assert_eq!(i64::mean(5, 2), Rational64::new(5, 2));
        assert_eq!(i64::mean(-6, 4), Rational64::new(-3, 2));
    }

    #[test]
    fn float_mode_uses_tolerance() {
        let x = MaxScalar::finite(1.0);
        assert!(x.close_to(MaxScalar::finite(1.0 + 1e-12)));
        assert!(!x.close_to(MaxScalar::finite(1.0 + 1e-6)));
        assert!(!x.close_to(MaxScalar::eps()));
    }
}
