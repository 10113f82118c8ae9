//! The Orlik-Solomon algebra in its nbc basis, the twisted differential
//! `a_lambda ^`, the beta-nbc cocycles, and the projection matrix from the
//! general-position cohomology onto that of a given type.

mod projection;
mod straighten;

use std::collections::BTreeMap;

pub use projection::{projection_matrix, CocycleBasis, ProjectionMatrix};
pub use straighten::Straightener;

use crate::arrangement::{IndexSet, Matroid};
use crate::error::{Error, Result};
use crate::exact::{Rational, Ring};
use crate::linalg::Matrix;
use straighten::merge_sign;

/// A homogeneous element of degree `q`, keyed by nbc `q`-sets.
#[derive(Debug, Clone, PartialEq)]
pub struct OSElement<R> {
    degree: usize,
    terms: BTreeMap<IndexSet, R>,
}

impl<R: Ring> OSElement<R> {
    pub fn zero(degree: usize) -> Self {
        OSElement { degree, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<IndexSet, R> {
        &self.terms
    }

    pub fn coeff(&self, key: &IndexSet) -> Option<&R> {
        self.terms.get(key)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: IndexSet, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = v.plus(&c);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// Coordinates in the given basis, which must contain every key.
    pub fn to_column(&self, basis: &[IndexSet], zero: &R) -> Vec<R> {
        debug_assert!(self.terms.keys().all(|k| basis.contains(k)));
        basis.iter().map(|b| self.terms.get(b).cloned().unwrap_or_else(|| zero.zero_like())).collect()
    }
}

impl Straightener {
    /// Straightens a raw combination of (possibly non-nbc) monomials.
    pub fn straighten_combination<R: Ring>(
        &self,
        degree: usize,
        raw: impl IntoIterator<Item = (IndexSet, R)>,
    ) -> OSElement<R> {
        let mut out = OSElement::zero(degree);
        for (key, c) in raw {
            if c.is_zero() {
                continue;
            }
            for (k, m) in self.expand(&key).iter() {
                out.add_term(k.clone(), c.times(&c.int_like(*m)));
            }
        }
        out
    }
}

/// The nbc expansion of the monomial `a_S`.
pub fn straighten(m: &Matroid, s: &IndexSet) -> OSElement<Rational> {
    Straightener::new(m).straighten_combination(s.len(), [(s.clone(), Rational::one())])
}

/// Matrix of `a_lambda ^ : A^q -> A^{q+1}`; column `S` is the expansion of
/// `a_lambda ^ a_S` for the nbc `q`-set `S`, rows are nbc `(q+1)`-sets.
///
/// `lambdas[j-1]` is the weight of hyperplane `j`.
pub fn a_lambda_matrix<R: Ring>(st: &Straightener, lambdas: &[R], q: usize) -> Matrix<R> {
    let m = st.matroid();
    let cols = m.nbc_sets(q);
    let rows = m.nbc_sets(q + 1);
    let zero = lambdas[0].zero_like();
    let mut out = Matrix::filled(rows.len(), cols.len(), zero.clone());
    for (ci, s) in cols.iter().enumerate() {
        let col = a_lambda_times(st, lambdas, s);
        for (ri, v) in col.to_column(&rows, &zero).into_iter().enumerate() {
            out[(ri, ci)] = v;
        }
    }
    out
}

fn a_lambda_times<R: Ring>(st: &Straightener, lambdas: &[R], s: &IndexSet) -> OSElement<R> {
    let n = st.matroid().n();
    let raw = (1..=n).filter(|&j| !s.contains(j)).map(|j| {
        let single = IndexSet::new(vec![j]).expect("valid index");
        let sign = merge_sign(&single, s);
        let c = if sign > 0 { lambdas[j - 1].clone() } else { lambdas[j - 1].negated() };
        (s.with(j), c)
    });
    st.straighten_combination(s.len() + 1, raw)
}

/// The cocycle `zeta(B) = a_lambda(X_1) ^ ... ^ a_lambda(X_l)` where `X_p` is
/// the edge cut out by `B_p, ..., B_l` and `a_lambda(X)` sums `lambda_i a_i`
/// over the hyperplanes containing `X`.
pub fn zeta<R: Ring>(st: &Straightener, lambdas: &[R], b: &IndexSet) -> Result<OSElement<R>> {
    let m = st.matroid();
    if !m.is_beta_nbc(b) {
        return Err(Error::NotBetaNbc(b.clone()));
    }
    Ok(zeta_unchecked(st, lambdas, b))
}

pub(crate) fn zeta_unchecked<R: Ring>(st: &Straightener, lambdas: &[R], b: &IndexSet) -> OSElement<R> {
    let m = st.matroid();
    let js = b.as_slice();
    let one = lambdas[0].one_like();
    let mut raw: BTreeMap<IndexSet, R> = BTreeMap::from([(IndexSet::default(), one)]);
    for p in 0..js.len() {
        let span = IndexSet::new(js[p..].to_vec()).expect("valid index").mask();
        let factor: Vec<usize> = (1..=m.n()).filter(|&i| m.spans(span, i)).collect();
        let mut next: BTreeMap<IndexSet, R> = BTreeMap::new();
        for (key, c) in &raw {
            for &i in &factor {
                if key.contains(i) {
                    continue;
                }
                let single = IndexSet::new(vec![i]).expect("valid index");
                let v = c.times(&lambdas[i - 1]);
                let v = if merge_sign(key, &single) > 0 { v } else { v.negated() };
                let e = next.entry(key.with(i)).or_insert_with(|| v.zero_like());
                *e = e.plus(&v);
            }
        }
        raw = next;
    }
    st.straighten_combination(js.len(), raw)
}
