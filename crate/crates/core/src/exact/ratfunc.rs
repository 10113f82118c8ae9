use std::fmt;

use super::{poly_gcd, Domain, Field, FractionField, MultiPoly, Rational, Ring};
use crate::error::{Error, Result};

/// Rational function in `l1..ln` kept in canonical form: coprime numerator
/// and denominator, denominator with leading coefficient 1, and `0/1` for
/// zero. Equal values have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    numer: MultiPoly,
    denom: MultiPoly,
}

impl RatFunc {
    /// Reduces `numer / denom` to canonical form.
    pub fn new(numer: MultiPoly, denom: MultiPoly) -> Result<Self> {
        if numer.nvars() != denom.nvars() {
            return Err(Error::VariableCountMismatch { left: numer.nvars(), right: denom.nvars() });
        }
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let n = numer.nvars();
        if numer.is_zero() {
            return Ok(RatFunc { numer, denom: MultiPoly::one(n) });
        }
        let (num, den) = if denom.is_constant() {
            (numer, denom)
        } else {
            let g = poly_gcd(&numer, &denom);
            if g.is_constant() {
                (numer, denom)
            } else {
                (
                    numer.div_exact_poly(&g).expect("gcd divides numerator"),
                    denom.div_exact_poly(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lc = den.leading_coeff().recip().expect("nonzero denominator");
        Ok(RatFunc { numer: num.scale(&lc), denom: den.scale(&lc) })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let n = p.nvars();
        RatFunc { numer: p, denom: MultiPoly::one(n) }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, c))
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::zero(nvars))
    }

    pub fn nvars(&self) -> usize {
        self.numer.nvars()
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.numer
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.denom
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.is_constant()
    }

    /// Value at `point`; fails when the denominator vanishes there.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        let d = self.denom.evaluate(point)?;
        if d.is_zero() {
            return Err(Error::DenominatorVanishes { denominator: self.denom.to_string() });
        }
        Ok(&self.numer.evaluate(point)? / &d)
    }

    pub fn try_add(&self, other: &RatFunc) -> Result<RatFunc> {
        if self.denom == other.denom {
            return RatFunc::new(self.numer.try_add(&other.numer)?, self.denom.clone());
        }
        RatFunc::new(
            self.numer.try_mul(&other.denom)?.try_add(&other.numer.try_mul(&self.denom)?)?,
            self.denom.try_mul(&other.denom)?,
        )
    }

    pub fn try_mul(&self, other: &RatFunc) -> Result<RatFunc> {
        if self.is_zero() || other.is_zero() {
            return Ok(RatFunc::zero(self.nvars()));
        }
        RatFunc::new(self.numer.try_mul(&other.numer)?, self.denom.try_mul(&other.denom)?)
    }

    pub fn recip(&self) -> Option<RatFunc> {
        if self.numer.is_zero() {
            return None;
        }
        RatFunc::new(self.denom.clone(), self.numer.clone()).ok()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({})/({})", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        RatFunc::constant(self.nvars(), Rational::one())
    }
    fn int_like(&self, v: i64) -> Self {
        RatFunc::constant(self.nvars(), Rational::from_int(v))
    }
    fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("variable count")
    }
    fn minus(&self, other: &Self) -> Self {
        self.try_add(&other.negated()).expect("variable count")
    }
    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).expect("variable count")
    }
    fn negated(&self) -> Self {
        RatFunc { numer: self.numer.negated(), denom: self.denom.clone() }
    }
}

impl Domain for RatFunc {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.div(other)
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
}

impl FractionField for RatFunc {
    type Base = MultiPoly;
    fn numer(&self) -> MultiPoly {
        self.numer.clone()
    }
    fn denom(&self) -> MultiPoly {
        self.denom.clone()
    }
}
