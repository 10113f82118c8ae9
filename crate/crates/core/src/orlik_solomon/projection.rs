use rayon::prelude::*;

use super::{a_lambda_matrix, zeta_unchecked, OSElement, Straightener};
use crate::arrangement::{subsets_of_size, IndexSet};
use crate::error::{Error, Result};
use crate::exact::{product, Field, FractionDomain, Ring};
use crate::linalg::{bareiss_echelon, Matrix};

/// Matrix of the surjection from the general-position cohomology onto
/// `H^l` of a type: row `I` (an `l`-subset of `[2..n]`) holds the
/// coordinates of the image of `eta_I` in the cocycles `zeta(B)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionMatrix<K> {
    pub rows: Vec<IndexSet>,
    pub cols: Vec<IndexSet>,
    pub entries: Matrix<K>,
}

impl<K: Ring> ProjectionMatrix<K> {
    pub fn map<U: Ring>(&self, f: impl Fn(&K) -> U) -> ProjectionMatrix<U> {
        ProjectionMatrix { rows: self.rows.clone(), cols: self.cols.clone(), entries: self.entries.map(f) }
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&K) -> Result<U>) -> Result<ProjectionMatrix<U>> {
        Ok(ProjectionMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.try_map(f)?,
        })
    }
}

/// Representatives of the top cohomology classes indexed by beta-nbc frames.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CocycleBasis {
    /// `eta_B = lambda_B a_B`, the labelling used for the printed examples.
    #[default]
    Monomial,
    /// The cocycles `zeta(B)` built from the edges `X_p`.
    Zeta,
}

/// Solves `lambda_I a_I = sum_B c_B zeta(B) + a_lambda ^ u` for every row
/// `I`, by one fraction-free elimination of `[D | Z | V]` where `D` is the
/// differential into the top degree, `Z` the cocycles and `V` the targets.
pub fn projection_matrix<R: FractionDomain>(
    st: &Straightener,
    lambdas: &[R],
    basis: CocycleBasis,
) -> Result<ProjectionMatrix<R::Frac>> {
    let m = st.matroid();
    let (n, ell) = (m.n(), m.ell());
    let top = m.nbc_sets(ell);
    let d = a_lambda_matrix(st, lambdas, ell - 1);
    let cols = m.beta_nbc();
    let rows = subsets_of_size(2, n, ell);
    let zero = lambdas[0].zero_like();

    let eta = |i: &IndexSet| {
        let weights: Vec<R> = i.iter().map(|j| lambdas[j - 1].clone()).collect();
        st.straighten_combination(ell, [(i.clone(), product(&zero, &weights))])
    };
    let zs: Vec<OSElement<R>> = cols
        .par_iter()
        .map(|b| match basis {
            CocycleBasis::Monomial => eta(b),
            CocycleBasis::Zeta => zeta_unchecked(st, lambdas, b),
        })
        .collect();
    let vs: Vec<OSElement<R>> = rows.par_iter().map(eta).collect();

    let (nd, nz, nv) = (d.cols(), zs.len(), vs.len());
    let mut big = Matrix::filled(top.len(), nd + nz + nv, zero.clone());
    for r in 0..top.len() {
        for c in 0..nd {
            big[(r, c)] = d[(r, c)].clone();
        }
    }
    for (k, e) in zs.iter().chain(vs.iter()).enumerate() {
        for (r, v) in e.to_column(&top, &zero).into_iter().enumerate() {
            big[(r, nd + k)] = v;
        }
    }

    let piv = bareiss_echelon(&mut big)?;
    let span = piv.iter().filter(|&&c| c < nd + nz).count();
    if span < top.len() {
        return Err(Error::SpanDefect { defect: top.len() - span });
    }
    let missing = (nd..nd + nz).filter(|c| !piv.contains(c)).count();
    if missing > 0 {
        return Err(Error::DependentCocycles { defect: missing });
    }

    let rank = top.len();
    let frac = |r: usize, c: usize| big[(r, c)].to_frac();
    let solved: Vec<Vec<R::Frac>> = (0..nv)
        .into_par_iter()
        .map(|k| -> Result<Vec<R::Frac>> {
            let vc = nd + nz + k;
            let mut x: Vec<R::Frac> = Vec::with_capacity(rank);
            for r in (0..rank).rev() {
                let mut acc = frac(r, vc);
                for (off, xv) in x.iter().enumerate() {
                    let r2 = rank - 1 - off;
                    let e = &big[(r, piv[r2])];
                    if !e.is_zero() && !xv.is_zero() {
                        acc = acc.minus(&e.to_frac().times(xv));
                    }
                }
                let q = acc
                    .div(&frac(r, piv[r]))
                    .ok_or_else(|| Error::Internal("zero pivot in back-substitution".into()))?;
                x.push(q);
            }
            x.reverse();
            Ok((nd..nd + nz)
                .map(|c| {
                    let r = piv.iter().position(|&p| p == c).expect("cocycle column is a pivot");
                    x[r].clone()
                })
                .collect())
        })
        .collect::<Result<_>>()?;

    Ok(ProjectionMatrix { rows, cols, entries: Matrix::from_rows_sized(solved, nz) })
}
