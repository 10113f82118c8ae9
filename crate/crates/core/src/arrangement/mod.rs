//! Realizations, combinatorial types, and the matroid data derived from
//! them: circuits, nbc and beta-nbc frames, flats, dense edges, Betti
//! numbers, and the nonresonance check.
//!
//! Hyperplanes are numbered `1..=n` in input order; `n + 1` is the
//! hyperplane at infinity with implicit row `(1, 0, ..., 0)`.

mod index_set;
mod matroid;
mod realization;
mod weights;

pub use index_set::{subsets_of_size, IndexSet};
pub use matroid::{Flat, Matroid};
pub use realization::{compute_type, CombinatorialType, Realization};
pub use weights::{
    concrete_lambdas, stv_check, stv_conditions, symbolic_lambdas, StvVerdict, Violation, Weights,
};

/// Betti numbers `b_0..b_l` of the complement and the Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiNumbers {
    pub betti: Vec<usize>,
    pub euler: i64,
}

/// Bases, projective circuits on `[n+1]`, and circuits of the affine
/// arrangement on `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasesAndCircuits {
    pub bases: Vec<IndexSet>,
    pub circuits: Vec<IndexSet>,
    pub circuits_affine: Vec<IndexSet>,
}

pub fn bases_and_circuits(m: &Matroid) -> BasesAndCircuits {
    BasesAndCircuits {
        bases: m.bases(),
        circuits: m.circuits(),
        circuits_affine: m.affine_circuits(),
    }
}

pub fn nbc_frames(m: &Matroid) -> Vec<IndexSet> {
    m.nbc_sets(m.ell())
}

pub fn betanbc_frames(m: &Matroid) -> Vec<IndexSet> {
    m.beta_nbc()
}

pub fn flats_and_dense_edges(m: &Matroid) -> Vec<Flat> {
    m.flats()
}

pub fn betti_and_euler(m: &Matroid) -> BettiNumbers {
    let betti: Vec<usize> = (0..=m.ell()).map(|q| m.nbc_sets(q).len()).collect();
    let euler = betti
        .iter()
        .enumerate()
        .map(|(q, &b)| if q % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    BettiNumbers { betti, euler }
}

#[cfg(test)]
mod tests;
