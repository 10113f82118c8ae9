#![allow(dead_code)]

use gmconn_core::{compute_type, CombinatorialType, Rational, Realization};
use rand::rngs::StdRng;
use rand::Rng;

pub fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

/// Small-integer rows; collisions among them give nontrivial types often.
pub fn random_rows(rng: &mut StdRng, n: usize, ell: usize, bound: i64) -> Vec<Vec<Rational>> {
    (0..n).map(|_| (0..=ell).map(|_| q(rng.gen_range(-bound..=bound))).collect()).collect()
}

/// Draws until the rows form a valid realization.
pub fn random_realization(rng: &mut StdRng, n: usize, ell: usize, bound: i64) -> Realization<Rational> {
    loop {
        if let Ok(r) = Realization::new(ell, random_rows(rng, n, ell, bound)) {
            return r;
        }
    }
}

/// A realization whose type has exactly one dependent set, with `n+1` in
/// that set or not as requested.
pub fn random_codim_one(rng: &mut StdRng, n: usize, at_infinity: bool) -> (Realization<Rational>, CombinatorialType) {
    loop {
        let r = random_realization(rng, n, 2, 3);
        let t = compute_type(&r);
        if t.dep().len() == 1 && t.dep().iter().next().unwrap().contains(n + 1) == at_infinity {
            return (r, t);
        }
    }
}

/// A nonzero rational `a/b` with `|a| <= 40`, `1 <= b <= 12`.
pub fn random_rational(rng: &mut StdRng) -> Rational {
    loop {
        let a = rng.gen_range(-40..=40);
        if a != 0 {
            return Rational::new(a, rng.gen_range(1..=12)).unwrap();
        }
    }
}
