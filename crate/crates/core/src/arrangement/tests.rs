use super::*;
use crate::exact::{parse_ratfunc, Rational, Ring};

fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

fn real(rows: &[[i64; 3]]) -> Realization<Rational> {
    Realization::new(2, rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
}

fn sets(labels: &[&str]) -> Vec<IndexSet> {
    labels.iter().map(|s| s.parse().unwrap()).collect()
}

fn example_t() -> Realization<Rational> {
    real(&[[0, 1, 0], [0, 0, 1], [0, 1, 1], [-1, 1, 2]])
}

fn selberg() -> Realization<Rational> {
    real(&[[0, 1, 0], [-1, 1, 0], [0, 0, 1], [-1, 0, 1], [0, 1, -1]])
}

fn generic_4() -> Realization<Rational> {
    real(&[[0, 1, 0], [0, 0, 1], [-1, 1, 1], [-3, 1, 2]])
}

/// Cofactor expansion of a 3x3 determinant, independent of the library.
fn det3(a: &[i64; 3], b: &[i64; 3], c: &[i64; 3]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn brute_dep(rows: &[[i64; 3]]) -> Vec<IndexSet> {
    let mut all = rows.to_vec();
    all.push([1, 0, 0]);
    subsets_of_size(1, all.len(), 3)
        .into_iter()
        .filter(|s| {
            let v = s.as_slice();
            det3(&all[v[0] - 1], &all[v[1] - 1], &all[v[2] - 1]) == 0
        })
        .collect()
}

#[test]
fn types_match_brute_force_minors() {
    let t_rows = [[0, 1, 0], [0, 0, 1], [0, 1, 1], [-1, 1, 2]];
    assert_eq!(compute_type(&example_t()).dep_list(), brute_dep(&t_rows));
    assert_eq!(compute_type(&example_t()).dep_list(), sets(&["123"]));
    let s_rows = [[0, 1, 0], [-1, 1, 0], [0, 0, 1], [-1, 0, 1], [0, 1, -1]];
    assert_eq!(compute_type(&selberg()).dep_list(), brute_dep(&s_rows));
    assert_eq!(compute_type(&selberg()).dep_list(), sets(&["126", "135", "245", "346"]));
    assert!(compute_type(&generic_4()).is_general());
}

#[test]
fn circuits_of_example_t() {
    let m = compute_type(&example_t()).matroid().unwrap();
    let bc = bases_and_circuits(&m);
    assert_eq!(bc.circuits_affine, sets(&["123"]));
    assert_eq!(bc.bases.len(), 9);
    assert!(bc.circuits.contains(&"123".parse().unwrap()));
}

#[test]
fn general_position_has_no_affine_circuits() {
    let m = CombinatorialType::general(4, 2).matroid().unwrap();
    assert!(m.affine_circuits().is_empty());
    assert_eq!(m.circuits().len(), 5);
}

#[test]
fn beta_nbc_frames() {
    let g = CombinatorialType::general(4, 2).matroid().unwrap();
    assert_eq!(betanbc_frames(&g), sets(&["23", "24", "34"]));
    let t = compute_type(&example_t()).matroid().unwrap();
    assert_eq!(betanbc_frames(&t), sets(&["24", "34"]));
    assert_eq!(nbc_frames(&t), sets(&["12", "13", "14", "24", "34"]));
    let s = compute_type(&selberg()).matroid().unwrap();
    assert_eq!(betanbc_frames(&s), sets(&["24", "25"]));
}

#[test]
fn betti_numbers() {
    let g = CombinatorialType::general(4, 2).matroid().unwrap();
    assert_eq!(betti_and_euler(&g), BettiNumbers { betti: vec![1, 4, 6], euler: 3 });
    let s = compute_type(&selberg()).matroid().unwrap();
    assert_eq!(betti_and_euler(&s), BettiNumbers { betti: vec![1, 5, 6], euler: 2 });
    let t = compute_type(&example_t()).matroid().unwrap();
    assert_eq!(betti_and_euler(&t), BettiNumbers { betti: vec![1, 4, 5], euler: 2 });
    // n = l: coordinate hyperplanes
    let b = real(&[[0, 1, 0], [0, 0, 1]]);
    let b = compute_type(&b).matroid().unwrap();
    assert_eq!(betti_and_euler(&b), BettiNumbers { betti: vec![1, 2, 1], euler: 0 });
}

#[test]
fn dense_edges() {
    let dense = |m: &Matroid| -> Vec<IndexSet> {
        flats_and_dense_edges(m).into_iter().filter(|f| f.dense).map(|f| f.members).collect()
    };
    let g = CombinatorialType::general(4, 2).matroid().unwrap();
    assert_eq!(dense(&g), sets(&["1", "2", "3", "4", "5"]));
    let t = compute_type(&example_t()).matroid().unwrap();
    assert_eq!(dense(&t), sets(&["1", "2", "3", "4", "5", "123"]));
    let s = compute_type(&selberg()).matroid().unwrap();
    assert_eq!(dense(&s), sets(&["1", "2", "3", "4", "5", "6", "126", "135", "245", "346"]));
    for f in flats_and_dense_edges(&s) {
        assert_eq!(f.rank, s.rank(f.members.mask()));
        assert_eq!(s.closure(f.members.mask()), f.members.mask());
    }
}

#[test]
fn stv_conditions_for_selberg() {
    let s = compute_type(&selberg()).matroid().unwrap();
    let got: Vec<String> = stv_conditions(&s).into_iter().map(|(_, p)| p.to_string()).collect();
    let expect: Vec<String> = ["l1", "l2", "l3", "l4", "l5", "-l1 - l2 - l3 - l4 - l5"]
        .iter()
        .map(|s| s.to_string())
        .chain(
            ["l1 + l2 + (-l1-l2-l3-l4-l5)", "l1 + l3 + l5", "l2 + l4 + l5", "l3 + l4 + (-l1-l2-l3-l4-l5)"]
                .iter()
                .map(|s| parse_ratfunc(s, 5).unwrap().numer().to_string()),
        )
        .collect();
    assert_eq!(got, expect);
}

#[test]
fn stv_verdicts() {
    let t = compute_type(&example_t()).matroid().unwrap();
    let r = |a: i64, b: i64| Rational::new(a, b).unwrap();
    let w = Weights::values(vec![r(-1, 2), r(-1, 3), r(-1, 5), r(-1, 7)], 4).unwrap();
    assert_eq!(w.lambda_inf(), Some(r(247, 210)));
    let v = stv_check(&t, &w).unwrap();
    assert!(v.nonresonant && !v.generic);

    let w = Weights::values(vec![q(0), r(1, 3), r(1, 5), r(1, 7)], 4).unwrap();
    let v = stv_check(&t, &w).unwrap();
    assert!(!v.nonresonant);
    assert_eq!(v.violations[0].flat, "1".parse().unwrap());
    assert!(v.violations[0].value.is_zero());

    let v = stv_check(&t, &Weights::Generic).unwrap();
    assert!(v.generic && v.nonresonant);
    assert!(Weights::values(vec![q(1)], 4).is_err());
}

#[test]
fn rejects_non_matroidal_dep() {
    // 123 and 124 dependent force 134 and 234 as well
    let t = CombinatorialType::new(4, 2, sets(&["123", "124"])).unwrap();
    assert!(matches!(t.matroid(), Err(crate::error::Error::NotMatroidal(_))));
}
