use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{Domain, FractionDomain, Rational, RatFunc, Ring};
use crate::error::{Error, Result};

/// Exponent vector ordered graded-lexicographically with `l1 > l2 > ... > ln`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over ℚ in `nvars` variables.
///
/// Terms are kept in descending graded-lex order with no zero
/// coefficients, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        MultiPoly { nvars, terms: vec![(Monomial::one(nvars), c)] }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `l{i+1}` (zero-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        MultiPoly { nvars, terms: vec![(Monomial::var(nvars, i), Rational::one())] }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "exponent vector length");
            let slot = acc.entry(m).or_insert_with(Rational::zero);
            *slot = &*slot + &c;
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, map: BTreeMap<Monomial, Rational>) -> Self {
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|t| t.0.degree()).unwrap_or(0)
    }

    /// Degree in the variable with zero-based index `v`.
    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[v]).max().unwrap_or(0)
    }

    fn check(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    fn merge(&self, other: &MultiPoly, negate_other: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &Rational| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &sign(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        MultiPoly { nvars: self.nvars, terms: out }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero(self.nvars));
        }
        if let Some(c) = other.as_constant() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.as_constant() {
            return Ok(other.scale(&c));
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(slot) => *slot = &*slot + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_map(self.nvars, acc))
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(mm, x)| (mm.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div_exact_poly(&self, other: &MultiPoly) -> Option<MultiPoly> {
        if other.is_zero() || self.nvars != other.nvars {
            return None;
        }
        if let Some(c) = other.as_constant() {
            return Some(self.scale(&c.recip()?));
        }
        let (lm, lc) = other.leading_term()?.clone();
        let lc_inv = lc.recip()?;
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((rm, rc)) = rem.leading_term().cloned() {
            let qm = rm.div(&lm)?;
            let qc = &rc * &lc_inv;
            rem = rem.merge(&other.mul_term(&qm, &qc), true);
            quot.push((qm, qc));
        }
        // quotient terms are produced in strictly descending order
        Some(MultiPoly { nvars: self.nvars, terms: quot })
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> MultiPoly {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip().expect("nonzero leading coefficient")),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::VariableCountMismatch { left: self.nvars, right: point.len() });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            total = &total + &t;
        }
        Ok(total)
    }

    /// Coefficients with respect to variable `v`: entry `k` multiplies `l_v^k`.
    pub(crate) fn coeffs_in(&self, v: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[v] as usize;
            let mut e = m.0.clone();
            e[v] = 0;
            buckets[k].push((Monomial(e), c.clone()));
        }
        buckets.into_iter().map(|t| MultiPoly::from_terms(self.nvars, t)).collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub(crate) fn from_coeffs_in(nvars: usize, v: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                let mut e = m.0.clone();
                e[v] += k as u32;
                terms.push((Monomial(e), x.clone()));
            }
        }
        MultiPoly::from_terms(nvars, terms)
    }

    /// Variables (zero-based) that occur with positive degree.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.degree_in(v) > 0).collect()
    }

    /// Writes the polynomial using `name(i)` for the zero-based variable `i`.
    pub fn fmt_with(&self, f: &mut dyn fmt::Write, name: &dyn Fn(usize) -> String) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(name(i)),
                    _ => factors.push(format!("{}^{}", name(i), e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, &|i| format!("l{}", i + 1))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

// The infallible trait methods treat a variable-count mismatch as a
// programming error; the `try_*` methods report it instead.
impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars)
    }
    fn int_like(&self, v: i64) -> Self {
        MultiPoly::constant(self.nvars, Rational::from_int(v))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("variable count")
    }
    fn minus(&self, other: &Self) -> Self {
        self.try_sub(other).expect("variable count")
    }
    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).expect("variable count")
    }
    fn negated(&self) -> Self {
        self.scale(&Rational::from_int(-1))
    }
}

impl Domain for MultiPoly {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.div_exact_poly(other)
    }
}

impl FractionDomain for MultiPoly {
    type Frac = RatFunc;
    fn to_frac(&self) -> RatFunc {
        RatFunc::from_poly(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i - 1)
    }

    #[test]
    fn cancellation_and_difference_of_squares() {
        let (l1, l2) = (l(2, 1), l(2, 2));
        assert_eq!(l1.plus(&l2).plus(&l2.negated()), l1);
        let p = l1.plus(&l2).times(&l1.minus(&l2));
        assert_eq!(p.to_string(), "l1^2 - l2^2");
    }

    #[test]
    fn zero_annihilates() {
        let z = MultiPoly::zero(3);
        let p = z.times(&l(3, 3));
        assert!(p.terms().is_empty());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn mismatched_variable_count_is_an_error() {
        let err = l(2, 1).try_add(&l(3, 1)).unwrap_err();
        assert_eq!(err, Error::VariableCountMismatch { left: 2, right: 3 });
    }

    #[test]
    fn grlex_order() {
        let n = 3;
        // l3^2 has higher total degree than l1
        let p = l(n, 1).plus(&l(n, 3).pow(2)).plus(&l(n, 2).times(&l(n, 1)));
        assert_eq!(p.to_string(), "l1*l2 + l3^2 + l1");
    }

    #[test]
    fn exact_division() {
        let n = 2;
        let a = l(n, 1).pow(2).minus(&l(n, 2).pow(2));
        let b = l(n, 1).plus(&l(n, 2));
        assert_eq!(a.div_exact_poly(&b).unwrap(), l(n, 1).minus(&l(n, 2)));
        assert!(a.div_exact_poly(&l(n, 1)).is_none());
    }

    #[test]
    fn coefficient_rendering() {
        let n = 2;
        let p = l(n, 1).scale(&"3/2".parse().unwrap()).minus(&MultiPoly::constant(n, 2.into()));
        assert_eq!(p.to_string(), "3/2*l1 - 2");
        assert_eq!(l(n, 2).negated().to_string(), "-l2");
    }
}
