use super::{Flat, IndexSet, Matroid};
use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Rational, Ring};

/// Weights of the rank-one local system. `lambda_{n+1}` is always derived
/// as `-(lambda_1 + ... + lambda_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Weights {
    Generic,
    Values(Vec<Rational>),
}

impl Weights {
    pub fn values(v: Vec<Rational>, n: usize) -> Result<Self> {
        if v.len() != n {
            return Err(Error::WeightLength { expected: n, found: v.len() });
        }
        Ok(Weights::Values(v))
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, Weights::Generic)
    }

    pub fn lambda_inf(&self) -> Option<Rational> {
        match self {
            Weights::Generic => None,
            Weights::Values(v) => Some(-v.iter().fold(Rational::zero(), |a, x| &a + x)),
        }
    }
}

/// `[l1, ..., ln, -(l1 + ... + ln)]` as polynomials in `n` variables.
pub fn symbolic_lambdas(n: usize) -> Vec<MultiPoly> {
    let mut v: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(n, i)).collect();
    let total = v.iter().fold(MultiPoly::zero(n), |a, x| a.plus(x));
    v.push(total.negated());
    v
}

/// The concrete analogue of [`symbolic_lambdas`].
pub fn concrete_lambdas(values: &[Rational]) -> Vec<Rational> {
    let mut v = values.to_vec();
    v.push(-values.iter().fold(Rational::zero(), |a, x| &a + x));
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub flat: IndexSet,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StvVerdict {
    pub generic: bool,
    pub nonresonant: bool,
    pub violations: Vec<Violation>,
}

/// Each dense flat with its weight sum `lambda_X` as a linear form.
pub fn stv_conditions(m: &Matroid) -> Vec<(Flat, MultiPoly)> {
    let lam = symbolic_lambdas(m.n());
    m.flats()
        .into_iter()
        .filter(|f| f.dense)
        .map(|f| {
            let s = f.members.iter().fold(MultiPoly::zero(m.n()), |a, j| a.plus(&lam[j - 1]));
            (f, s)
        })
        .collect()
}

/// Tests `lambda_X` against the nonnegative integers on every dense flat.
pub fn stv_check(m: &Matroid, w: &Weights) -> Result<StvVerdict> {
    let values = match w {
        Weights::Generic => {
            return Ok(StvVerdict { generic: true, nonresonant: true, violations: Vec::new() })
        }
        Weights::Values(v) => v,
    };
    if values.len() != m.n() {
        return Err(Error::WeightLength { expected: m.n(), found: values.len() });
    }
    let lam = concrete_lambdas(values);
    let violations: Vec<Violation> = m
        .flats()
        .into_iter()
        .filter(|f| f.dense)
        .filter_map(|f| {
            let value = f.members.iter().fold(Rational::zero(), |a, j| &a + &lam[j - 1]);
            value.is_nonnegative_integer().then_some(Violation { flat: f.members, value })
        })
        .collect();
    Ok(StvVerdict { generic: false, nonresonant: violations.is_empty(), violations })
}
