use std::fmt::Display;

use gmconn_core::{IndexSet, Matrix};
use gmconn_core::exact::Ring;
use serde_json::{json, Value};

/// A matrix with row and column basis labels, entries already rendered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeled {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl Labeled {
    pub fn new<T: Ring + Display>(rows: &[IndexSet], cols: &[IndexSet], m: &Matrix<T>) -> Self {
        Labeled {
            rows: rows.iter().map(|s| s.label()).collect(),
            cols: cols.iter().map(|s| s.label()).collect(),
            entries: m.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        }
    }

    pub fn json(&self) -> Value {
        json!({ "rows": self.rows, "cols": self.cols, "entries": self.entries })
    }

    /// Aligned table; the corner cell is empty and labels are prefixed
    /// with `eta_`.
    pub fn text(&self) -> String {
        let head: Vec<String> = self.cols.iter().map(|c| format!("eta_{c}")).collect();
        let side: Vec<String> = self.rows.iter().map(|r| format!("eta_{r}")).collect();
        let lw = side.iter().map(|s| s.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.cols.len())
            .map(|j| {
                self.entries.iter().map(|r| r[j].len()).chain([head[j].len()]).max().unwrap_or(0)
            })
            .collect();
        let line = |label: &str, cells: &[String]| {
            let mut s = format!("{label:<lw$}");
            for (c, w) in cells.iter().zip(&widths) {
                s.push_str(&format!("  {c:<w$}"));
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line("", &head);
        for (l, r) in side.iter().zip(&self.entries) {
            out.push_str(&line(l, r));
        }
        out
    }
}

pub fn set_list(sets: &[IndexSet]) -> String {
    if sets.is_empty() {
        return "(none)".into();
    }
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn labels(sets: &[IndexSet]) -> Vec<String> {
    sets.iter().map(|s| s.label()).collect()
}
