//! Worked examples with published answers: the four-line arrangement with
//! one triple point and its three degenerations, and the Selberg
//! arrangement with the degeneration where lines 3, 4, 5 coincide.
//!
//! [`run_suite`] recomputes every printed matrix and compares entries as
//! canonical rational functions.

use crate::aomoto_kita::omega_general;
use crate::arrangement::{
    betanbc_frames, compute_type, stv_conditions, CombinatorialType, IndexSet, Realization,
};
use crate::error::Result;
use crate::exact::{parse_pathpoly, parse_ratfunc, RatFunc, Rational};
use crate::gauss_manin::{analyze_path, connection_symbolic, DegenerationPath};
use crate::linalg::Matrix;
use crate::orlik_solomon::{projection_matrix, CocycleBasis, Straightener};

fn rational_rows(rows: &[[i64; 3]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&v| Rational::from_int(v)).collect()).collect()
}

fn path(rows: &[[&str; 3]], witness: i64) -> DegenerationPath {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_pathpoly(s).expect("fixture parses")).collect())
        .collect();
    let r = Realization::path(2, rows).expect("fixture path is well formed");
    DegenerationPath::new(r, Rational::from_int(witness)).expect("nonzero witness")
}

/// Lines `u1 = 0`, `u2 = 0`, `u1 + u2 = 0`, `u1 + 2 u2 = 1`: lines 1, 2, 3
/// meet at the origin.
pub fn example_t() -> Realization<Rational> {
    Realization::new(2, rational_rows(&[[0, 1, 0], [0, 0, 1], [0, 1, 1], [-1, 1, 2]]))
        .expect("fixture is valid")
}

/// Degenerations of [`example_t`]: lines 3 and 4 become parallel; lines 1
/// and 2 coincide; line 4 moves through the triple point.
pub fn example_t_paths() -> Vec<(&'static str, DegenerationPath)> {
    vec![
        ("T1", path(&[["0", "1", "0"], ["0", "0", "1"], ["0", "1", "1"], ["-1", "1", "1 + t"]], 1)),
        ("T2", path(&[["0", "1", "0"], ["0", "1", "t"], ["0", "1", "-1"], ["-1", "1", "2"]], 1)),
        ("T3", path(&[["0", "1", "0"], ["0", "0", "1"], ["0", "1", "1"], ["-t", "1", "2"]], 1)),
    ]
}

/// `Q = u1 (u1 - 1) u2 (u2 - 1) (u1 - u2)` in the order of the figure.
pub fn selberg() -> Realization<Rational> {
    Realization::new(2, rational_rows(&[[0, 1, 0], [-1, 1, 0], [0, 0, 1], [-1, 0, 1], [0, 1, -1]]))
        .expect("fixture is valid")
}

/// Lines 4 and 5 rotate onto line 3 as `t -> 0`.
pub fn selberg_path() -> DegenerationPath {
    path(&[["0", "1", "0"], ["-1", "1", "0"], ["0", "0", "1"], ["-t", "0", "1"], ["0", "-t", "1"]], 1)
}

/// One comparison in the suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn sets(labels: &[&str]) -> Vec<IndexSet> {
    labels.iter().map(|s| s.parse().expect("fixture label")).collect()
}

fn compare(actual: &Matrix<RatFunc>, expected: &[&[&str]], n: usize) -> std::result::Result<(), String> {
    if actual.rows() != expected.len() || expected.iter().any(|r| r.len() != actual.cols()) {
        return Err(format!("shape {}x{} differs", actual.rows(), actual.cols()));
    }
    for (i, row) in expected.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            let want = parse_ratfunc(s, n).map_err(|e| e.to_string())?;
            if actual[(i, j)] != want {
                return Err(format!("entry ({}, {}) is {}, expected {}", i + 1, j + 1, actual[(i, j)], want));
            }
        }
    }
    Ok(())
}

fn check(name: &str, f: impl FnOnce() -> Result<std::result::Result<(), String>>) -> GoldenCheck {
    let (passed, detail) = match f() {
        Ok(Ok(())) => (true, "ok".to_string()),
        Ok(Err(msg)) => (false, msg),
        Err(e) => (false, format!("error: {e}")),
    };
    GoldenCheck { name: name.to_string(), passed, detail }
}

fn same<T: PartialEq + std::fmt::Debug>(actual: T, expected: T) -> std::result::Result<(), String> {
    if actual == expected {
        Ok(())
    } else {
        Err(format!("got {actual:?}, expected {expected:?}"))
    }
}

const OMEGA_G: [(&str, [[&str; 3]; 3]); 5] = [
    ("345", [["0", "0", "-l2"], ["0", "0", "l2"], ["0", "0", "-l1 - l2"]]),
    ("125", [["-l3", "-l3", "0"], ["-l4", "-l4", "0"], ["0", "0", "0"]]),
    ("124", [["0", "0", "0"], ["l4", "l1 + l2 + l4", "l2"], ["0", "0", "0"]]),
    ("134", [["0", "0", "0"], ["0", "0", "0"], ["-l4", "l3", "l1 + l3 + l4"]]),
    ("234", [["l4", "-l3", "l2"], ["-l4", "l3", "-l2"], ["l4", "-l3", "l2"]]),
];

/// Checks for the four-line example.
pub fn example_t_suite() -> Vec<GoldenCheck> {
    let mut out = Vec::new();
    let t = compute_type(&example_t());
    out.push(check("four lines: dep(T)", || Ok(same(t.dep_list(), sets(&["123"])))));
    out.push(check("four lines: betanbc(T), betanbc(G)", || {
        let m = t.matroid()?;
        let g = CombinatorialType::general(4, 2).matroid()?;
        Ok(same(betanbc_frames(&m), sets(&["24", "34"]))
            .and(same(betanbc_frames(&g), sets(&["23", "24", "34"]))))
    }));
    out.push(check("four lines: P(T)", || {
        let p = projection_matrix(
            &Straightener::new(&t.matroid()?),
            &crate::arrangement::symbolic_lambdas(4),
            CocycleBasis::Monomial,
        )?;
        Ok(compare(
            &p.entries,
            &[&["(-l3)/(l1 + l2 + l3)", "l2/(l1 + l2 + l3)"], &["1", "0"], &["0", "1"]],
            4,
        ))
    }));
    for (j, rows) in OMEGA_G {
        out.push(check(&format!("four lines: Omega_G({j})"), || {
            let m = omega_general(&j.parse()?, 4, 2)?.map(|x| RatFunc::from_poly(x.clone()));
            let exp: Vec<&[&str]> = rows.iter().map(|r| &r[..]).collect();
            Ok(compare(&m.entries, &exp, 4))
        }));
    }
    // name, dep(T', T), multiplicities, Omega_T(T')
    type Solved<'a> = (&'a str, &'a [&'a str], &'a [(&'a str, u32)], [[&'a str; 2]; 2]);
    let solved: [Solved; 3] = [
        ("T1", &["345"], &[("345", 1)], [["0", "l2"], ["0", "-l1 - l2"]]),
        ("T2", &["124", "125"], &[("124", 1), ("125", 1)], [["l1 + l2", "l2"], ["0", "0"]]),
        (
            "T3",
            &["124", "134", "234"],
            &[("124", 1), ("134", 1), ("234", 1)],
            [["l1 + l2 + l3 + l4", "0"], ["0", "l1 + l2 + l3 + l4"]],
        ),
    ];
    let paths = example_t_paths();
    for ((name, rel, mult, omega), (_, p)) in solved.iter().zip(paths.iter()) {
        out.push(check(&format!("four lines: Omega_T({name})"), || {
            let deg = analyze_path(p)?;
            if deg.t != t {
                return Ok(Err(format!("path starts at type {:?}", deg.t.dep_list())));
            }
            let rd = crate::gauss_manin::relative_dep(&deg.t, &deg.tprime)?;
            if let Err(e) = same(rd, sets(rel)) {
                return Ok(Err(format!("dep(T', T): {e}")));
            }
            let want: Vec<(IndexSet, u32)> = mult.iter().map(|(k, v)| (k.parse().expect("label"), *v)).collect();
            let got: Vec<(IndexSet, u32)> = deg.multiplicities.clone().into_iter().collect();
            if let Err(e) = same(got, want) {
                return Ok(Err(format!("multiplicities: {e}")));
            }
            let c = connection_symbolic(&deg, CocycleBasis::Monomial)?;
            let exp: Vec<&[&str]> = omega.iter().map(|r| &r[..]).collect();
            Ok(compare(&c.omega.entries, &exp, 4))
        }));
    }
    out
}

/// Checks for the Selberg arrangement.
pub fn selberg_suite() -> Vec<GoldenCheck> {
    let mut out = Vec::new();
    let s = compute_type(&selberg());
    out.push(check("selberg: betanbc(S)", || Ok(same(betanbc_frames(&s.matroid()?), sets(&["24", "25"])))));
    out.push(check("selberg: nonresonance conditions", || {
        let conds: Vec<RatFunc> =
            stv_conditions(&s.matroid()?).into_iter().map(|(_, p)| RatFunc::from_poly(p)).collect();
        let l6 = "(-l1 - l2 - l3 - l4 - l5)";
        let want: Vec<RatFunc> = [
            "l1".to_string(),
            "l2".into(),
            "l3".into(),
            "l4".into(),
            "l5".into(),
            l6.into(),
            format!("l1 + l2 + {l6}"),
            "l1 + l3 + l5".into(),
            "l2 + l4 + l5".into(),
            format!("l3 + l4 + {l6}"),
        ]
        .iter()
        .map(|x| parse_ratfunc(x, 5))
        .collect::<Result<_>>()?;
        let mut got = conds;
        let mut want = want;
        got.sort_by_key(|x| x.to_string());
        want.sort_by_key(|x| x.to_string());
        Ok(same(got, want))
    }));
    out.push(check("selberg: P(S)", || {
        let p = projection_matrix(
            &Straightener::new(&s.matroid()?),
            &crate::arrangement::symbolic_lambdas(5),
            CocycleBasis::Monomial,
        )?;
        Ok(compare(
            &p.entries,
            &[
                &["-1", "-1"],
                &["1", "0"],
                &["0", "1"],
                &["0", "0"],
                &[
                    "(l3*l5 - l2*l5)/(l2*(l1 + l3 + l5))",
                    "(-(l2*l3 + l3*l4 + l2*l5))/(l2*(l1 + l3 + l5))",
                ],
                &["(-l5)/l2", "l4/l2"],
            ],
            5,
        ))
    }));
    out.push(check("selberg: dep(S', S) and multiplicities", || {
        let deg = analyze_path(&selberg_path())?;
        let want: Vec<(IndexSet, u32)> = ["134", "145", "234", "235", "345", "356", "456"]
            .iter()
            .map(|k| (k.parse().expect("label"), if *k == "345" { 2 } else { 1 }))
            .collect();
        Ok(same(deg.multiplicities.into_iter().collect(), want))
    }));
    out.push(check("selberg: Omega_S(S')", || {
        let deg = analyze_path(&selberg_path())?;
        let c = connection_symbolic(&deg, CocycleBasis::Monomial)?;
        Ok(compare(&c.omega.entries, &[&["l3 + l4 + l5", "0"], &["0", "l3 + l4 + l5"]], 5))
    }));
    out
}

/// Both suites, in order.
pub fn run_suite() -> Vec<GoldenCheck> {
    let mut v = example_t_suite();
    v.extend(selberg_suite());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Ring;

    #[test]
    fn every_check_passes() {
        for c in run_suite() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn fixtures_have_expected_types() {
        assert_eq!(compute_type(&selberg()).dep_list(), sets(&["126", "135", "245", "346"]));
        for (_, p) in example_t_paths() {
            assert!(p.witness.is_one());
        }
    }
}
