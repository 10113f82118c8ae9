use crate::aomoto_kita::ConnectionMatrix;
use crate::error::{Error, Result};
use crate::exact::FractionField;
use crate::linalg::{clear_denominators, invert, rank, Matrix};
use crate::orlik_solomon::ProjectionMatrix;

/// The unique `Omega` with `P * Omega = B * P`.
///
/// Rows of `P` are taken greedily in order while they raise the rank; the
/// resulting square block is inverted, and every row of the equation is
/// checked afterwards.
pub fn solve_connection<K: FractionField>(
    p: &ProjectionMatrix<K>,
    b: &ConnectionMatrix<K>,
) -> Result<ConnectionMatrix<K>> {
    let pm = &p.entries;
    let k = pm.cols();
    if b.basis != p.rows {
        return Err(Error::Internal("connection and projection bases differ".into()));
    }
    let cleared = clear_denominators(pm);
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    for i in 0..pm.rows() {
        if chosen.len() == k {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(i);
        if rank(&cleared.select_rows(&trial))? == trial.len() {
            chosen = trial;
        }
    }
    if chosen.len() < k {
        return Err(Error::RankDeficient { rank: chosen.len(), expected: k });
    }
    let bp = b.entries.mul(pm);
    let omega = if k == 0 {
        Matrix::from_rows_sized(Vec::new(), 0)
    } else {
        let inv = invert(&pm.select_rows(&chosen))
            .ok_or_else(|| Error::Internal("selected block is singular".into()))?;
        inv.mul(&bp.select_rows(&chosen))
    };
    let lhs = pm.mul(&omega);
    for i in 0..pm.rows() {
        if lhs.row(i) != bp.row(i) {
            return Err(Error::InconsistentSystem { row: p.rows[i].clone() });
        }
    }
    Ok(ConnectionMatrix { basis: p.cols.clone(), entries: omega })
}
