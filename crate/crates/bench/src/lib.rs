//! Workloads shared by the benchmarks.

use gmconn_core::{CombinatorialType, Rational, Realization};

/// Lines `u1 + k u2 = k^3` for `k = 1..=n`: slopes are distinct, and three
/// of them meet only if `a + b + c = 0`.
pub fn general_lines(n: usize) -> Realization<Rational> {
    let rows = (1..=n as i64)
        .map(|k| vec![Rational::from_int(-k * k * k), Rational::from_int(1), Rational::from_int(k)])
        .collect();
    Realization::new(2, rows).expect("rows are distinct and essential")
}

/// The general-position type on `n` hyperplanes in dimension `ell`.
pub fn general_type(n: usize, ell: usize) -> CombinatorialType {
    CombinatorialType::general(n, ell)
}
