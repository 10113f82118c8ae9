//! JSON input files.
//!
//! An arrangement file holds `n`, `ell`, `rows` (`n` arrays of `ell + 1`
//! rational strings) and `weights` (`"generic"` or `n` rational strings).
//! A path file has the same shape with `t`-polynomial rows, plus
//! `t_witness` and optional declared dependency lists.

use gmconn_core::exact::{parse_pathpoly, PathPoly};
use gmconn_core::{CombinatorialType, DegenerationPath, IndexSet, Rational, Realization, Weights};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightsField {
    Mode(String),
    Values(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub n: usize,
    pub ell: usize,
    pub rows: Vec<Vec<String>>,
    pub weights: WeightsField,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_witness: Option<String>,
    #[serde(default, rename = "declared_dep_T", skip_serializing_if = "Option::is_none")]
    pub declared_dep_t: Option<Vec<String>>,
    #[serde(default, rename = "declared_dep_Tprime", skip_serializing_if = "Option::is_none")]
    pub declared_dep_tprime: Option<Vec<String>>,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

impl ArrangementFile {
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CliError> {
        let text = std::str::from_utf8(bytes).map_err(|e| bad(format!("not UTF-8: {e}")))?;
        let f: ArrangementFile = serde_json::from_str(text).map_err(|e| bad(format!("bad JSON: {e}")))?;
        if f.rows.len() != f.n {
            return Err(bad(format!("expected {} rows, found {}", f.n, f.rows.len())));
        }
        for (i, r) in f.rows.iter().enumerate() {
            if r.len() != f.ell + 1 {
                return Err(bad(format!("row {} has {} entries, expected {}", i + 1, r.len(), f.ell + 1)));
            }
        }
        Ok(f)
    }

    fn weights(&self) -> Result<Weights, CliError> {
        match &self.weights {
            WeightsField::Mode(m) if m == "generic" => Ok(Weights::Generic),
            WeightsField::Mode(m) => Err(bad(format!("unknown weights mode {m:?}"))),
            WeightsField::Values(v) => {
                let vals = v.iter().map(|s| rational(s)).collect::<Result<Vec<_>, _>>()?;
                Ok(Weights::values(vals, self.n)?)
            }
        }
    }

    fn dep(&self, list: &Option<Vec<String>>) -> Result<Option<CombinatorialType>, CliError> {
        let Some(list) = list else { return Ok(None) };
        let sets = list
            .iter()
            .map(|s| s.parse::<IndexSet>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Some(CombinatorialType::new(self.n, self.ell, sets)?))
    }
}

fn rational(s: &str) -> Result<Rational, CliError> {
    s.trim().parse().map_err(|_| bad(format!("malformed rational {s:?}")))
}

/// A realization and its weights.
pub fn parse_arrangement_file(bytes: &[u8]) -> Result<(Realization<Rational>, Weights), CliError> {
    let f = ArrangementFile::from_bytes(bytes)?;
    if f.t_witness.is_some() {
        return Err(bad("arrangement file has a t_witness; use a path command"));
    }
    let rows = f
        .rows
        .iter()
        .map(|r| r.iter().map(|s| rational(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let r = Realization::new(f.ell, rows)?;
    Ok((r, f.weights()?))
}

/// A degeneration path, with any declared endpoint types attached, and its
/// weights.
pub fn parse_path_file(bytes: &[u8]) -> Result<(DegenerationPath, Weights), CliError> {
    let f = ArrangementFile::from_bytes(bytes)?;
    let witness = f.t_witness.as_deref().ok_or_else(|| bad("path file needs t_witness"))?;
    let rows = f
        .rows
        .iter()
        .map(|r| r.iter().map(|s| parse_pathpoly(s)).collect::<Result<Vec<PathPoly>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let path = DegenerationPath::new(Realization::path(f.ell, rows)?, rational(witness)?)?
        .declare(f.dep(&f.declared_dep_t)?, f.dep(&f.declared_dep_tprime)?);
    Ok((path, f.weights()?))
}

fn weights_field(w: &Weights) -> WeightsField {
    match w {
        Weights::Generic => WeightsField::Mode("generic".into()),
        Weights::Values(v) => WeightsField::Values(v.iter().map(|x| x.to_string()).collect()),
    }
}

fn labels(t: &Option<CombinatorialType>) -> Option<Vec<String>> {
    t.as_ref().map(|t| t.dep_list().iter().map(|s| s.label()).collect())
}

/// The file that parses back to `(r, w)`.
pub fn arrangement_to_file(r: &Realization<Rational>, w: &Weights) -> ArrangementFile {
    ArrangementFile {
        n: r.n(),
        ell: r.ell(),
        rows: r.rows().iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect(),
        weights: weights_field(w),
        t_witness: None,
        declared_dep_t: None,
        declared_dep_tprime: None,
    }
}

pub fn path_to_file(p: &DegenerationPath, w: &Weights) -> ArrangementFile {
    let r = &p.path;
    ArrangementFile {
        n: r.n(),
        ell: r.ell(),
        rows: r.rows().iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect(),
        weights: weights_field(w),
        t_witness: Some(p.witness.to_string()),
        declared_dep_t: labels(&p.declared_t),
        declared_dep_tprime: labels(&p.declared_tprime),
    }
}
