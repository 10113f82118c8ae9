use std::collections::BTreeSet;

use super::{subsets_of_size, IndexSet, Matroid};
use crate::error::{Error, Result};
use crate::exact::{Domain, PathPoly, Rational, Ring};
use crate::linalg::{determinant, rank, Matrix};

/// The `n x (l+1)` matrix of an affine arrangement. Row `i` holds
/// `(x_{i,0}, x_{i,1}, ..., x_{i,l})` for the hyperplane
/// `x_{i,0} + x_{i,1} u_1 + ... + x_{i,l} u_l = 0`. Row `n+1` is implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization<E> {
    ell: usize,
    rows: Vec<Vec<E>>,
}

impl<E: Domain> Realization<E> {
    fn check_shape(ell: usize, rows: &[Vec<E>]) -> Result<()> {
        if ell == 0 {
            return Err(Error::InvalidRealization("ell must be positive".into()));
        }
        if rows.len() < ell {
            return Err(Error::InvalidRealization(format!(
                "{} rows cannot span dimension {ell}",
                rows.len()
            )));
        }
        if rows.len() + 1 > 31 {
            return Err(Error::InvalidRealization(format!("too many hyperplanes ({})", rows.len())));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ell + 1 {
                return Err(Error::InvalidRealization(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    r.len(),
                    ell + 1
                )));
            }
            if r.iter().all(|x| x.is_zero()) {
                return Err(Error::InvalidRealization(format!("row {} is zero", i + 1)));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    fn row_or_infinity(&self, i: usize) -> Vec<E> {
        if i == self.n() + 1 {
            let z = self.rows[0][0].zero_like();
            let mut r = vec![z.clone(); self.ell + 1];
            r[0] = z.one_like();
            r
        } else {
            self.rows[i - 1].clone()
        }
    }

    /// The determinant of the rows indexed by `set`.
    pub fn minor(&self, set: &IndexSet) -> Result<E> {
        if set.len() != self.ell + 1 || set.last().is_none_or(|m| m > self.n() + 1) {
            return Err(Error::MalformedIndexSet(format!(
                "{set} is not an {}-subset of [1..{}]",
                self.ell + 1,
                self.n() + 1
            )));
        }
        let m = Matrix::from_rows(set.iter().map(|i| self.row_or_infinity(i)).collect());
        determinant(&m)
    }

    /// All `(l+1)`-minors in lexicographic order.
    pub fn all_minors(&self) -> Vec<(IndexSet, E)> {
        subsets_of_size(1, self.n() + 1, self.ell + 1)
            .into_iter()
            .map(|s| {
                let d = self.minor(&s).expect("well-formed subset");
                (s, d)
            })
            .collect()
    }

    fn linear_rank(&self) -> Result<usize> {
        let m = Matrix::from_rows(self.rows.iter().map(|r| r[1..].to_vec()).collect());
        rank(&m)
    }
}

impl Realization<Rational> {
    /// A realization of a genuine arrangement: no zero rows, no row
    /// parallel to the hyperplane at infinity, no two rows projectively
    /// equal, and linear parts of full rank `l` (essential).
    pub fn new(ell: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = Self::new_relaxed(ell, rows)?;
        for (i, row) in r.rows.iter().enumerate() {
            if row[1..].iter().all(|x| x.is_zero()) {
                return Err(Error::InvalidRealization(format!(
                    "row {} is the hyperplane at infinity",
                    i + 1
                )));
            }
        }
        if r.linear_rank()? != ell {
            return Err(Error::InvalidRealization(format!(
                "arrangement is not essential: linear parts have rank < {ell}"
            )));
        }
        for i in 0..r.n() {
            for j in i + 1..r.n() {
                let pair = Matrix::from_rows(vec![r.rows[i].clone(), r.rows[j].clone()]);
                if rank(&pair)? < 2 {
                    return Err(Error::InvalidRealization(format!(
                        "rows {} and {} define the same hyperplane",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(r)
    }

    /// Shape and nonzero-row checks only; used for the special fibre of a
    /// degeneration, where hyperplanes may collide.
    pub fn new_relaxed(ell: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::check_shape(ell, &rows)?;
        Ok(Realization { ell, rows })
    }
}

impl Realization<PathPoly> {
    /// A one-parameter family of realizations. Rows must not vanish
    /// identically; everything else is checked on specializations.
    pub fn path(ell: usize, rows: Vec<Vec<PathPoly>>) -> Result<Self> {
        Self::check_shape(ell, &rows)?;
        Ok(Realization { ell, rows })
    }

    pub fn evaluate(&self, t: &Rational) -> Result<Realization<Rational>> {
        let rows = self.rows.iter().map(|r| r.iter().map(|p| p.evaluate(t)).collect()).collect();
        Realization::<Rational>::new_relaxed(self.ell, rows)
    }

    /// The strict realization at a generic parameter value.
    pub fn evaluate_strict(&self, t: &Rational) -> Result<Realization<Rational>> {
        let rows = self.rows.iter().map(|r| r.iter().map(|p| p.evaluate(t)).collect()).collect();
        Realization::<Rational>::new(self.ell, rows)
    }
}

/// The combinatorial type: which `(l+1)`-subsets of `[n+1]` are dependent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombinatorialType {
    n: usize,
    ell: usize,
    dep: BTreeSet<IndexSet>,
}

impl CombinatorialType {
    pub fn new(n: usize, ell: usize, dep: impl IntoIterator<Item = IndexSet>) -> Result<Self> {
        let dep: BTreeSet<IndexSet> = dep.into_iter().collect();
        for j in &dep {
            if j.len() != ell + 1 || j.last().is_none_or(|m| m > n + 1) {
                return Err(Error::MalformedIndexSet(format!(
                    "{j} is not an {}-subset of [1..{}]",
                    ell + 1,
                    n + 1
                )));
            }
        }
        Ok(CombinatorialType { n, ell, dep })
    }

    /// The general-position type `G` with no dependencies.
    pub fn general(n: usize, ell: usize) -> Self {
        CombinatorialType { n, ell, dep: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn dep(&self) -> &BTreeSet<IndexSet> {
        &self.dep
    }

    pub fn dep_list(&self) -> Vec<IndexSet> {
        self.dep.iter().cloned().collect()
    }

    pub fn ind(&self) -> Vec<IndexSet> {
        subsets_of_size(1, self.n + 1, self.ell + 1)
            .into_iter()
            .filter(|s| !self.dep.contains(s))
            .collect()
    }

    pub fn is_general(&self) -> bool {
        self.dep.is_empty()
    }

    pub fn matroid(&self) -> Result<Matroid> {
        Matroid::from_type(self)
    }
}

/// `dep = { J : minor_J = 0 }` over all `(l+1)`-subsets of `[n+1]`.
pub fn compute_type(r: &Realization<Rational>) -> CombinatorialType {
    let dep = r.all_minors().into_iter().filter(|(_, d)| d.is_zero()).map(|(s, _)| s);
    CombinatorialType { n: r.n(), ell: r.ell(), dep: dep.collect() }
}
