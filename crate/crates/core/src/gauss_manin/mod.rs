//! Degeneration paths, vanishing-order multiplicities, and the solve of
//! `P(T) * Omega_T(T') = (sum_J m_J Omega_G(J)) * P(T)`.

mod codim1;
mod path;
mod solve;

use rayon::prelude::*;

pub use codim1::{codim1_projection_closed_form, ClosedForm};
pub use path::{analyze_path, multiplicities, Degeneration, DegenerationPath, MultiplicityTable};
pub use solve::solve_connection;

use crate::aomoto_kita::{general_basis, omega_general_with, ConnectionMatrix};
use crate::arrangement::{
    concrete_lambdas, stv_check, symbolic_lambdas, CombinatorialType, IndexSet, Weights,
};
use crate::error::{Error, Result};
use crate::exact::{FractionDomain, RatFunc, Rational, Ring};
use crate::linalg::Matrix;
use crate::orlik_solomon::{projection_matrix, CocycleBasis, ProjectionMatrix, Straightener};

/// `dep(T') - dep(T)`, provided `dep(T)` is a proper subset of `dep(T')`.
pub fn relative_dep(t: &CombinatorialType, tprime: &CombinatorialType) -> Result<Vec<IndexSet>> {
    if t.n() != tprime.n() || t.ell() != tprime.ell() || !t.dep().is_subset(tprime.dep()) || t.dep() == tprime.dep()
    {
        return Err(Error::NotADegeneration { t: t.dep_list(), tprime: tprime.dep_list() });
    }
    Ok(tprime.dep().difference(t.dep()).cloned().collect())
}

/// `sum_J m_J Omega_G(J)` over `dep(T', T)`, with symbolic weights.
pub fn combined_omega(
    t: &CombinatorialType,
    tprime: &CombinatorialType,
    mult: &MultiplicityTable,
) -> Result<ConnectionMatrix<crate::exact::MultiPoly>> {
    combined_omega_with(t, tprime, mult, &symbolic_lambdas(t.n()))
}

pub fn combined_omega_with<R: Ring>(
    t: &CombinatorialType,
    tprime: &CombinatorialType,
    mult: &MultiplicityTable,
    lambdas: &[R],
) -> Result<ConnectionMatrix<R>> {
    let rel = relative_dep(t, tprime)?;
    let keys: Vec<IndexSet> = mult.keys().cloned().collect();
    if keys != rel {
        return Err(Error::MultiplicityKeyMismatch { expected: rel, found: keys });
    }
    let (n, ell) = (t.n(), t.ell());
    let parts: Vec<ConnectionMatrix<R>> = mult
        .par_iter()
        .map(|(j, &m)| {
            let om = omega_general_with(j, n, ell, lambdas)?;
            let k = lambdas[0].int_like(m as i64);
            Ok(om.map(|x| x.times(&k)))
        })
        .collect::<Result<_>>()?;
    let basis = general_basis(n, ell);
    let zero = Matrix::filled(basis.len(), basis.len(), lambdas[0].zero_like());
    let entries = parts.iter().fold(zero, |acc, p| acc.add(&p.entries));
    Ok(ConnectionMatrix { basis, entries })
}

/// Everything the full pipeline produces for one degeneration.
#[derive(Debug, Clone, PartialEq)]
pub struct Connection<K> {
    pub projection: ProjectionMatrix<K>,
    pub combined: ConnectionMatrix<K>,
    pub omega: ConnectionMatrix<K>,
}

/// `P(T)`, `sum m_J Omega_G(J)` and `Omega_T(T')` for weights `lambdas`
/// (length `n+1`).
pub fn connection_with<R: FractionDomain>(
    deg: &Degeneration,
    lambdas: &[R],
    basis: CocycleBasis,
) -> Result<Connection<R::Frac>> {
    let m = deg.t.matroid()?;
    let st = Straightener::new(&m);
    let projection = projection_matrix(&st, lambdas, basis)?;
    let combined =
        combined_omega_with(&deg.t, &deg.tprime, &deg.multiplicities, lambdas)?.map(|x| x.to_frac());
    let omega = solve_connection(&projection, &combined)?;
    Ok(Connection { projection, combined, omega })
}

/// Symbolic pipeline over `Q(l1..ln)`.
pub fn connection_symbolic(deg: &Degeneration, basis: CocycleBasis) -> Result<Connection<RatFunc>> {
    connection_with(deg, &symbolic_lambdas(deg.t.n()), basis)
}

/// Pipeline over `Q` at concrete weights, which must pass the STV check.
pub fn connection_concrete(
    deg: &Degeneration,
    values: &[Rational],
    basis: CocycleBasis,
) -> Result<Connection<Rational>> {
    let w = Weights::values(values.to_vec(), deg.t.n())?;
    let verdict = stv_check(&deg.t.matroid()?, &w)?;
    if !verdict.nonresonant {
        let list: Vec<String> =
            verdict.violations.iter().map(|v| format!("{} -> {}", v.flat, v.value)).collect();
        return Err(Error::Resonant(list.join(", ")));
    }
    connection_with(deg, &concrete_lambdas(values), basis)
}
