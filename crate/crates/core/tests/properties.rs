//! Randomized properties across modules. Inputs are drawn by proptest, either
//! directly or as seeds for the library's own generators.

use defcoh::defdgla::{gerstenhaber_bracket, pullback, DeformationComplex, Multiderivation};
use defcoh::exactla::{format_rational, frac, parse_rational, RationalMatrix};
use defcoh::instance::{Instance, InstanceFile};
use defcoh::liecore::ce_complex;
use defcoh::random::{self, rng};
use defcoh::twovect::{closed_form_dims, full_complex, three_term_complex, LAVectorSpace};
use proptest::prelude::*;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
    proptest::collection::vec((-4i64..=4, 1i64..=3), rows * cols).prop_map(move |v| {
        let data = v.into_iter().map(|(p, q)| frac(p, q)).collect();
        RationalMatrix::from_vec(rows, cols, data).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let x = frac(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn rank_nullity(m in small_matrix(3, 4)) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), 4);
        prop_assert!(m.dot(&k).is_zero());
    }

    #[test]
    fn rank_of_transpose(m in small_matrix(3, 2)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn inverse_of_invertible(seed in any::<u64>(), n in 1usize..=4) {
        let a = random::invertible_matrix(&mut rng(seed), n);
        prop_assert_eq!(a.dot(&a.inverse().unwrap()), RationalMatrix::identity(n));
    }

    #[test]
    fn instance_round_trip(seed in any::<u64>()) {
        let mut g = rng(seed);
        for inst in [
            Instance::LieAlgebra(random::catalog_lie(&mut g, 3).unwrap()),
            Instance::VbAlgebra(random::catalog_representation(&mut g, 3, 2).unwrap()),
            Instance::LaVectorSpace(random::la_vector_space(&mut g, 3, 3).unwrap()),
        ] {
            let text = InstanceFile::new("x", Some(seed), &inst).to_json();
            let back = InstanceFile::parse(&text).unwrap().validate(6).unwrap();
            prop_assert_eq!(back, inst);
        }
    }

    #[test]
    fn deformation_cohomology_is_basis_free(seed in any::<u64>()) {
        let mut g = rng(seed);
        let l = random::catalog_lie(&mut g, 3).unwrap();
        let phi = random::invertible_matrix(&mut g, l.dim());
        let dims = |x| DeformationComplex::new(x).unwrap().complex().cohomology_dims();
        prop_assert_eq!(dims(&l), dims(&l.transform(&phi).unwrap()));
    }

    #[test]
    fn ce_euler_characteristic(seed in any::<u64>()) {
        // χ of the cochains equals χ of the cohomology.
        let r = random::catalog_representation(&mut rng(seed), 3, 2).unwrap();
        let cx = ce_complex(&r);
        let chi = |v: &[usize]| v.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum::<i64>();
        prop_assert_eq!(chi(cx.term_dims()), chi(&cx.cohomology_dims()));
    }

    #[test]
    fn pullback_preserves_brackets(seed in any::<u64>(), arity in 0usize..=3) {
        let mut g = rng(seed);
        let a = random::multiderivation(&mut g, 3, arity, 2, 0.5);
        let b = random::multiderivation(&mut g, 3, 2, 2, 0.5);
        let phi = random::invertible_matrix(&mut g, 3);
        let lhs = pullback(&phi, &gerstenhaber_bracket(&a, &b).unwrap()).unwrap();
        let rhs = gerstenhaber_bracket(&pullback(&phi, &a).unwrap(), &pullback(&phi, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lav_closed_forms(m in 1usize..=3, p in 1usize..=3, seed in any::<u64>()) {
        let d = random::integer_matrix(&mut rng(seed), p, m, 1);
        let lav = LAVectorSpace::new(d);
        prop_assert_eq!(three_term_complex(&lav).cohomology_dims(), closed_form_dims(&lav));
        let full = full_complex(&lav, 2).unwrap();
        let low: Vec<usize> = (-1..=1).map(|k| full.cohomology_dim(k).unwrap()).collect();
        prop_assert_eq!(low, closed_form_dims(&lav).to_vec());
    }
}

#[test]
fn zero_multiderivation_brackets_to_zero() {
    let z = Multiderivation::zero(3, 2);
    let c = random::multiderivation(&mut rng(5), 3, 2, 2, 1.0);
    assert!(gerstenhaber_bracket(&z, &c).unwrap().is_zero());
}
