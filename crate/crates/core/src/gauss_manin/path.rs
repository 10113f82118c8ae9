use std::collections::BTreeMap;

use rayon::prelude::*;

use super::relative_dep;
use crate::arrangement::{compute_type, subsets_of_size, CombinatorialType, IndexSet, Realization};
use crate::error::{Error, Result};
use crate::exact::{PathPoly, Rational, Ring};

/// `m_J` for each `J` in `dep(T', T)`.
pub type MultiplicityTable = BTreeMap<IndexSet, u32>;

/// A one-parameter family `x(t)` with `x(t*)` of type `T` and `x(0)` of
/// type `T'`.
#[derive(Debug, Clone, PartialEq)]
pub struct DegenerationPath {
    pub path: Realization<PathPoly>,
    pub witness: Rational,
    pub declared_t: Option<CombinatorialType>,
    pub declared_tprime: Option<CombinatorialType>,
}

impl DegenerationPath {
    pub fn new(path: Realization<PathPoly>, witness: Rational) -> Result<Self> {
        if witness.is_zero() {
            return Err(Error::InvalidRealization("witness parameter must be nonzero".into()));
        }
        Ok(DegenerationPath { path, witness, declared_t: None, declared_tprime: None })
    }

    pub fn declare(mut self, t: Option<CombinatorialType>, tprime: Option<CombinatorialType>) -> Self {
        self.declared_t = t;
        self.declared_tprime = tprime;
        self
    }
}

/// A validated degeneration with its multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct Degeneration {
    pub t: CombinatorialType,
    pub tprime: CombinatorialType,
    pub multiplicities: MultiplicityTable,
    /// `Delta_J(x(t))` for every `J`, in lexicographic order.
    pub minors: Vec<(IndexSet, PathPoly)>,
}

fn check_declared(at: &str, declared: &Option<CombinatorialType>, found: &CombinatorialType) -> Result<()> {
    match declared {
        Some(d) if d != found => Err(Error::TypeMismatch {
            at: at.into(),
            expected: d.dep_list(),
            found: found.dep_list(),
        }),
        _ => Ok(()),
    }
}

/// Validates the path and computes `m_J = ord_t Delta_J(x(t))`.
///
/// Both endpoint types are recomputed from the path. Minors indexed by
/// `dep(T)` must vanish identically so that the whole path lies in the
/// closure of the stratum of `T`.
pub fn analyze_path(p: &DegenerationPath) -> Result<Degeneration> {
    let r = &p.path;
    let minors: Vec<(IndexSet, PathPoly)> = subsets_of_size(1, r.n() + 1, r.ell() + 1)
        .into_par_iter()
        .map(|s| r.minor(&s).map(|d| (s, d)))
        .collect::<Result<_>>()?;
    let lookup: BTreeMap<&IndexSet, &PathPoly> = minors.iter().map(|(s, d)| (s, d)).collect();

    if let (Some(dt), Some(dtp)) = (&p.declared_t, &p.declared_tprime) {
        for j in dtp.dep().difference(dt.dep()) {
            if lookup.get(j).is_some_and(|d| d.is_zero()) {
                return Err(Error::IdenticallyZeroMinor(j.clone()));
            }
        }
    }

    let t = compute_type(&r.evaluate_strict(&p.witness)?);
    check_declared(&format!("t = {}", p.witness), &p.declared_t, &t)?;
    let tprime = compute_type(&r.evaluate(&Rational::zero())?);
    check_declared("t = 0", &p.declared_tprime, &tprime)?;

    let rel = relative_dep(&t, &tprime)?;
    for j in t.dep() {
        if !lookup[j].is_zero() {
            return Err(Error::PathLeavesStratum(j.clone()));
        }
    }
    let mut multiplicities = MultiplicityTable::new();
    for j in rel {
        let m = lookup[&j].ord_t().ok_or_else(|| Error::IdenticallyZeroMinor(j.clone()))?;
        multiplicities.insert(j, m as u32);
    }
    Ok(Degeneration { t, tprime, multiplicities, minors })
}

pub fn multiplicities(p: &DegenerationPath) -> Result<MultiplicityTable> {
    Ok(analyze_path(p)?.multiplicities)
}
