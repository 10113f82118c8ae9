//! Exact arithmetic: rationals, sparse multivariate polynomials in the
//! weights `l1..ln`, canonical rational functions, and univariate
//! polynomials in the path parameter `t`.
//!
//! All algorithms above this module are written against the small ring
//! traits defined here, so the same code runs with symbolic weights
//! (`MultiPoly` / `RatFunc`) and with concrete weights (`Rational`).

mod gcd;
mod multipoly;
mod parse;
mod pathpoly;
mod ratfunc;
mod rational;

use std::fmt;

pub use gcd::poly_gcd;
pub use multipoly::{Monomial, MultiPoly};
pub use parse::{parse_pathpoly, parse_ratfunc};
pub use pathpoly::PathPoly;
pub use ratfunc::RatFunc;
pub use rational::Rational;

/// Commutative ring with identity.
///
/// Constants are produced from an existing element (`zero_like`, ...)
/// because a polynomial ring needs to know its variable count.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

/// Integral domain with exact division.
pub trait Domain: Ring {
    /// `self / other` when the quotient exists in the ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

/// A field; `inv` fails only on zero.
pub trait Field: Domain {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.times(&i))
    }
}

/// A domain together with its field of fractions.
pub trait FractionDomain: Domain {
    type Frac: FractionField<Base = Self>;

    fn to_frac(&self) -> Self::Frac;
}

/// A field of fractions with access to a numerator/denominator pair.
pub trait FractionField: Field {
    type Base: FractionDomain<Frac = Self>;

    fn numer(&self) -> Self::Base;
    fn denom(&self) -> Self::Base;
}

/// Product of a slice of ring elements; `template` supplies the identity.
pub fn product<R: Ring>(template: &R, items: &[R]) -> R {
    items.iter().fold(template.one_like(), |acc, x| acc.times(x))
}

/// Sum of a slice of ring elements.
pub fn sum<R: Ring>(template: &R, items: &[R]) -> R {
    items.iter().fold(template.zero_like(), |acc, x| acc.plus(x))
}
