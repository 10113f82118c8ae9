use crate::aomoto_kita::general_basis;
use crate::arrangement::{symbolic_lambdas, CombinatorialType, IndexSet};
use crate::error::{Error, Result};
use crate::exact::{MultiPoly, RatFunc, Ring};
use crate::linalg::Matrix;
use crate::orlik_solomon::ProjectionMatrix;

/// The closed-form projection for a type with a single dependency `K`,
/// computed after relabeling hyperplanes so that `K = [l+1]` (when
/// `n+1` is not in `K`) or `K = [n-l+1, n+1]` (when it is).
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    /// `relabeling[i-1]` is the new index of hyperplane `i`; `n+1` is fixed.
    pub relabeling: Vec<usize>,
    pub relabeled: CombinatorialType,
    pub projection: ProjectionMatrix<RatFunc>,
}

pub fn codim1_projection_closed_form(t: &CombinatorialType) -> Result<ClosedForm> {
    if t.dep().len() != 1 {
        return Err(Error::NotCodimensionOne(t.dep().len()));
    }
    let (n, ell) = (t.n(), t.ell());
    let k = t.dep().iter().next().expect("one element").clone();
    let at_infinity = k.contains(n + 1);

    let mut sigma = vec![0; n + 1];
    sigma[n] = n + 1;
    let inside: Vec<usize> = k.iter().filter(|&i| i <= n).collect();
    let outside: Vec<usize> = (1..=n).filter(|i| !k.contains(*i)).collect();
    let (first, second) = if at_infinity { (&outside, &inside) } else { (&inside, &outside) };
    for (pos, &i) in first.iter().chain(second.iter()).enumerate() {
        sigma[i - 1] = pos + 1;
    }
    let new_k = IndexSet::new(k.iter().map(|i| sigma[i - 1]).collect())?;
    let relabeled = CombinatorialType::new(n, ell, [new_k])?;

    let rows = general_basis(n, ell);
    let lam = symbolic_lambdas(n);
    let one = RatFunc::from_poly(MultiPoly::one(n));
    let special = if at_infinity {
        IndexSet::new((n - ell + 1..=n).collect())?
    } else {
        IndexSet::new((2..=ell + 1).collect())?
    };
    let cols: Vec<IndexSet> = rows.iter().filter(|i| **i != special).cloned().collect();
    let mut m = Matrix::filled(rows.len(), cols.len(), one.zero_like());
    for (r, i) in rows.iter().enumerate() {
        if *i != special {
            let c = cols.binary_search(i).expect("column present");
            m[(r, c)] = one.clone();
        } else if !at_infinity {
            let total = (1..=ell + 1).fold(MultiPoly::zero(n), |a, j| a.plus(&lam[j - 1]));
            for j in 2..=ell + 1 {
                let coeff = RatFunc::new(lam[j - 1].clone(), total.clone())?;
                let coeff = if (j + ell) % 2 == 0 { coeff } else { coeff.negated() };
                for q in ell + 2..=n {
                    let target = special.without(j).with(q);
                    let c = cols.binary_search(&target).expect("column present");
                    m[(r, c)] = m[(r, c)].plus(&coeff);
                }
            }
        }
    }
    Ok(ClosedForm {
        relabeling: sigma,
        relabeled,
        projection: ProjectionMatrix { rows, cols, entries: m },
    })
}
