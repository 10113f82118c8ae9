//! Connection matrices `Omega_G(J)` for general-position arrangements,
//! acting on the basis `eta_I`, `I` an `l`-subset of `[2..n]`.

use crate::arrangement::{subsets_of_size, symbolic_lambdas, IndexSet};
use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Ring};
use crate::linalg::Matrix;

/// Square matrix on a list of frames; row `I` holds the coefficients of
/// the image of basis element `I`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnectionMatrix<K> {
    pub basis: Vec<IndexSet>,
    pub entries: Matrix<K>,
}

impl<K: Ring> ConnectionMatrix<K> {
    pub fn map<U: Ring>(&self, f: impl Fn(&K) -> U) -> ConnectionMatrix<U> {
        ConnectionMatrix { basis: self.basis.clone(), entries: self.entries.map(f) }
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&K) -> Result<U>) -> Result<ConnectionMatrix<U>> {
        Ok(ConnectionMatrix { basis: self.basis.clone(), entries: self.entries.try_map(f)? })
    }
}

fn parity(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(-1)^(p+q)` where `K = I u I'`, `I = K_p`, `I' = K_q`, and `K_p` is `K`
/// with its `p`-th smallest element removed.
pub fn epsilon(i: &IndexSet, ip: &IndexSet) -> Result<i64> {
    let k = i.union(ip);
    if i.len() != ip.len() || k.len() != i.len() + 1 {
        return Err(Error::Overlap(i.clone(), ip.clone()));
    }
    let p = k.position(k.difference(i).first().expect("one element")).expect("member");
    let q = k.position(k.difference(ip).first().expect("one element")).expect("member");
    Ok(parity(p + q))
}

/// The basis `eta_I`, `I` an `l`-subset of `[2..n]`, in lexicographic order.
pub fn general_basis(n: usize, ell: usize) -> Vec<IndexSet> {
    subsets_of_size(2, n, ell)
}

/// `Omega_G(J)` with symbolic weights.
pub fn omega_general(j: &IndexSet, n: usize, ell: usize) -> Result<ConnectionMatrix<MultiPoly>> {
    omega_general_with(j, n, ell, &symbolic_lambdas(n))
}

/// `Omega_G(J)` with weights `lambdas[0..=n]` (the last one for `n+1`).
pub fn omega_general_with<R: Ring>(
    j: &IndexSet,
    n: usize,
    ell: usize,
    lambdas: &[R],
) -> Result<ConnectionMatrix<R>> {
    if j.len() != ell + 1 || j.last().is_none_or(|m| m > n + 1) {
        return Err(Error::MalformedIndexSet(format!(
            "{j} is not an {}-subset of [1..{}]",
            ell + 1,
            n + 1
        )));
    }
    let basis = general_basis(n, ell);
    let zero = lambdas[0].zero_like();
    let lam = |s: &IndexSet| s.iter().fold(zero.clone(), |a, x| a.plus(&lambdas[x - 1]));
    let signed = |v: R, s: i64| if s > 0 { v } else { v.negated() };
    let idx = |s: &IndexSet| basis.binary_search(s).ok();
    let mut m = Matrix::filled(basis.len(), basis.len(), zero.clone());
    let mut add = |r: usize, c: usize, v: R| m[(r, c)] = m[(r, c)].plus(&v);

    let has1 = j.contains(1);
    let has_inf = j.contains(n + 1);
    match (has1, has_inf) {
        (false, false) => {
            for q in 1..=ell + 1 {
                let i = j.without_position(q);
                let r = idx(&i).expect("subset of [2..n]");
                for p in 1..=ell + 1 {
                    let jp = j.without_position(p);
                    let c = idx(&jp).expect("subset of [2..n]");
                    add(r, c, signed(lambdas[j.as_slice()[p - 1] - 1].clone(), parity(p + q)));
                }
            }
        }
        (false, true) => {
            let jprime = j.without(n + 1);
            let c = idx(&jprime).expect("subset of [2..n]");
            for (r, i) in basis.iter().enumerate() {
                if *i == jprime {
                    let rest: IndexSet = IndexSet::new((1..=n).filter(|x| !i.contains(*x)).collect())?;
                    add(r, c, lam(&rest).negated());
                } else if i.intersection(&jprime).len() + 1 == ell {
                    let e = epsilon(i, &jprime)?;
                    add(r, c, signed(lam(&i.difference(&jprime)), -e));
                }
            }
        }
        (true, false) => {
            let i = j.without(1);
            let r = idx(&i).expect("subset of [2..n]");
            add(r, r, lam(j));
            for (c, ip) in basis.iter().enumerate() {
                if i.intersection(ip).len() + 1 == ell {
                    let e = epsilon(&i, ip)?;
                    add(r, c, signed(lam(&i.difference(ip)), -e));
                }
            }
        }
        (true, true) => {
            let jpp = j.without(1).without(n + 1);
            for (r, i) in basis.iter().enumerate() {
                if !jpp.is_subset(i) {
                    continue;
                }
                let l = lam(&i.difference(j));
                add(r, r, l.negated());
                for (c, ip) in basis.iter().enumerate() {
                    if ip != i && i.intersection(ip) == i.intersection(j) {
                        add(r, c, signed(l.clone(), epsilon(i, ip)?));
                    }
                }
            }
        }
    }
    Ok(ConnectionMatrix { basis, entries: m })
}
