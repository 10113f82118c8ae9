mod common;

use gmconn_core::arrangement::{betanbc_frames, betti_and_euler, concrete_lambdas, stv_check, symbolic_lambdas};
use gmconn_core::exact::{parse_ratfunc, poly_gcd, Field, Monomial, Ring};
use gmconn_core::linalg::{determinant, rank};
use gmconn_core::orlik_solomon::{a_lambda_matrix, straighten};
use gmconn_core::{
    analyze_path, compute_type, connection_symbolic, projection_matrix, CocycleBasis,
    DegenerationPath, IndexSet, Matrix, MultiPoly, PathPoly, RatFunc, Rational, Realization,
    Straightener, Weights,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::*;

fn poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -5i64..=5), 0..5).prop_map(move |terms| {
        MultiPoly::from_terms(
            nvars,
            terms.into_iter().map(|(e, c)| (Monomial::from_exponents(e), Rational::from_int(c))),
        )
    })
}

fn nonzero_poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    poly(nvars).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_laws(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert_eq!(a.plus(&b).minus(&b), a.clone());
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(2), b in nonzero_poly(2), c in nonzero_poly(2)) {
        let (x, y) = (a.times(&c), b.times(&c));
        let g = poly_gcd(&x, &y);
        prop_assert!(x.div_exact_poly(&g).is_some());
        prop_assert!(y.div_exact_poly(&g).is_some());
        prop_assert!(g.div_exact_poly(&c.monic()).is_some());
    }

    #[test]
    fn ratfunc_canonical_and_printable(a in poly(3), b in nonzero_poly(3), c in nonzero_poly(3)) {
        let f = RatFunc::new(a.times(&c), b.times(&c)).unwrap();
        prop_assert_eq!(&f, &RatFunc::new(a.clone(), b.clone()).unwrap());
        prop_assert_eq!(parse_ratfunc(&f.to_string(), 3).unwrap(), f.clone());
        if !f.is_zero() {
            prop_assert!(f.times(&f.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn index_set_labels_parse_back(v in prop::collection::btree_set(1usize..=14, 0..5)) {
        let s = IndexSet::new(v.into_iter().collect()).unwrap();
        prop_assert_eq!(s.label().parse::<IndexSet>().unwrap(), s.clone());
        prop_assert_eq!(IndexSet::from_mask(s.mask()), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn type_is_projective(seed in any::<u64>(), n in 3usize..=6, scale in 1i64..=7) {
        let mut rng = StdRng::seed_from_u64(seed);
        let r = random_realization(&mut rng, n, 2, 3);
        let rows: Vec<Vec<Rational>> = r
            .rows()
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let k = q(if i % 2 == 0 { scale } else { -scale });
                row.iter().map(|x| x * &k).collect()
            })
            .collect();
        prop_assert_eq!(compute_type(&Realization::new(2, rows).unwrap()), compute_type(&r));
    }

    #[test]
    fn cohomology_counts(seed in any::<u64>(), n in 3usize..=6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = compute_type(&random_realization(&mut rng, n, 2, 2)).matroid().unwrap();
        let beta = betanbc_frames(&m).len();
        prop_assert_eq!(beta as i64, betti_and_euler(&m).euler.abs());
        let st = Straightener::new(&m);
        let lam = symbolic_lambdas(n);
        let d0 = a_lambda_matrix(&st, &lam, 0);
        let d1 = a_lambda_matrix(&st, &lam, 1);
        prop_assert!(d1.mul(&d0).is_zero());
        prop_assert_eq!(m.nbc_sets(2).len() - rank(&d1).unwrap(), beta);
    }

    #[test]
    fn straightening_kills_dependent_monomials(seed in any::<u64>(), n in 4usize..=6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = compute_type(&random_realization(&mut rng, n, 2, 2)).matroid().unwrap();
        for c in m.affine_circuits() {
            // expansions only use affine-independent keys
            let e = straighten(&m, &c);
            prop_assert!(e.terms().keys().all(|k| m.is_affine_independent(k.mask())));
        }
        for s in gmconn_core::arrangement::subsets_of_size(1, n, 3) {
            prop_assert!(straighten(&m, &s).is_zero(), "{} should vanish in rank 2", s);
        }
    }

    #[test]
    fn specialization_commutes_for_projection(seed in any::<u64>(), n in 3usize..=5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = compute_type(&random_realization(&mut rng, n, 2, 2));
        let m = t.matroid().unwrap();
        let w: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
        prop_assume!(stv_check(&m, &Weights::Values(w.clone())).unwrap().nonresonant);
        let st = Straightener::new(&m);
        let sym = projection_matrix(&st, &symbolic_lambdas(n), CocycleBasis::Monomial).unwrap();
        let num = projection_matrix(&st, &concrete_lambdas(&w), CocycleBasis::Monomial);
        prop_assert_eq!(sym.entries.try_map(|x| x.evaluate(&w)).unwrap(), num.unwrap().entries);
    }

    #[test]
    fn degenerations_from_general_position(seed in any::<u64>(), n in 3usize..=5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let special = random_realization(&mut rng, n, 2, 2);
        prop_assume!(!compute_type(&special).is_general());
        let generic = loop {
            let r = random_realization(&mut rng, n, 2, 9);
            if compute_type(&r).is_general() {
                break r;
            }
        };
        // x(t) = special + t (generic - special)
        let rows: Vec<Vec<PathPoly>> = special
            .rows()
            .iter()
            .zip(generic.rows())
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| PathPoly::new(vec![x.clone(), y - x])).collect())
            .collect();
        let path = Realization::path(2, rows).unwrap();
        prop_assume!(path.evaluate_strict(&q(1)).is_ok());
        let p = DegenerationPath::new(path, q(1)).unwrap();
        let d = analyze_path(&p).unwrap();
        for (j, minor) in &d.minors {
            if d.tprime.dep().contains(j) {
                prop_assert!(d.multiplicities[j] >= 1);
            } else {
                prop_assert_eq!(minor.ord_t(), Some(0));
            }
        }
        let c = connection_symbolic(&d, CocycleBasis::Monomial).unwrap();
        prop_assert_eq!(c.projection.entries.mul(&c.omega.entries), c.combined.entries.mul(&c.projection.entries));
        // P(G) is the identity, so Omega is the combined matrix itself
        prop_assert_eq!(c.omega.entries, c.combined.entries);
    }
}

#[test]
fn determinant_is_multiplicative() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..20 {
        let a = Matrix::from_rows(random_rows(&mut rng, 3, 2, 5));
        let b = Matrix::from_rows(random_rows(&mut rng, 3, 2, 5));
        assert_eq!(
            determinant(&a.mul(&b)).unwrap(),
            determinant(&a).unwrap() * determinant(&b).unwrap()
        );
    }
}
