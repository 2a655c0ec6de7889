use std::sync::Arc;

use motkit_core::chow::VarietyExpression;
use motkit_core::correspondence::{compose, transpose};
use motkit_core::decompose::krull_schmidt;
use motkit_core::ff::{Fp, FpMatrix, FpSubspace};
use motkit_core::motive::{is_projector, MotiveSummand};
use motkit_core::poly::Poly;
use motkit_core::sampling::{random_matrix, random_projector_pair};
use motkit_core::zoo;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = Fp> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(7)].prop_map(|p| Fp::new(p).unwrap())
}

fn expr(f: Fp, which: usize) -> VarietyExpression {
    let s = match which {
        0 => vec![zoo::projective_space(f, 1)],
        1 => vec![zoo::projective_space(f, 2)],
        2 => vec![zoo::conic(f)],
        3 => vec![zoo::split_quadric_odd(f, 3).unwrap()],
        _ => vec![zoo::projective_space(f, 1), zoo::conic(f)],
    };
    VarietyExpression::new(f, s.into_iter().map(Arc::new).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(f in field(), rows in 1usize..7, cols in 1usize..7, seed in any::<u64>()) {
        let m = random_matrix(f, rows, cols, &mut ChaCha8Rng::seed_from_u64(seed));
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.rows(), cols);
        prop_assert_eq!(k.rank(), k.rows());
        prop_assert!(m.mul(&k.transpose()).unwrap().is_zero());
    }

    #[test]
    fn inverse_is_two_sided(f in field(), n in 1usize..6, seed in any::<u64>()) {
        let m = random_matrix(f, n, n, &mut ChaCha8Rng::seed_from_u64(seed));
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv).unwrap(), FpMatrix::identity(f, n));
            prop_assert_eq!(inv.mul(&m).unwrap(), FpMatrix::identity(f, n));
        } else {
            prop_assert!(m.rank() < n);
        }
    }

    #[test]
    fn subspace_dimension_formula(f in field(), seed in any::<u64>(), a in 0usize..5, b in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = FpSubspace::span(&random_matrix(f, a, 5, &mut rng));
        let v = FpSubspace::span(&random_matrix(f, b, 5, &mut rng));
        let s = u.sum(&v).unwrap();
        let i = u.intersection(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
    }

    #[test]
    fn polynomial_division(f in field(), a in prop::collection::vec(0u32..7, 0..8), b in prop::collection::vec(0u32..7, 1..5)) {
        let a = Poly::new(f, &a.iter().map(|&c| c % f.p()).collect::<Vec<_>>());
        let b = Poly::new(f, &b.iter().map(|&c| c % f.p()).collect::<Vec<_>>());
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b, f);
        prop_assert_eq!(q.mul(&b, f).add(&r, f), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn sampled_summands_behave(f in field(), which in 0usize..5, twist in -2i64..3, seed in any::<u64>()) {
        let e = expr(f, which);
        let (outer, inner) = random_projector_pair(&e, twist, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(is_projector(&outer).unwrap());
        prop_assert_eq!(compose(&outer, &inner).unwrap(), inner.clone());
        prop_assert_eq!(transpose(&transpose(&outer)), outer.clone());
        let n = MotiveSummand::new(outer, twist).unwrap();
        prop_assert_eq!(n.dual().dual(), n.clone());
        if !n.is_zero() {
            let m = MotiveSummand::new(inner, twist).unwrap();
            prop_assert!(m.is_summand_of(&n).unwrap());
        }
    }

    #[test]
    fn split_decomposition_has_rank_many_pieces(f in field(), which in 0usize..5, seed in any::<u64>()) {
        let e = expr(f, which);
        let (outer, _) = random_projector_pair(&e, 0, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let n = MotiveSummand::new(outer, 0).unwrap();
        let ee = e.concat(&e).unwrap();
        let ks = krull_schmidt(&n, &FpSubspace::full(f, ee.basis_len()), seed).unwrap();
        prop_assert_eq!(ks.summands.len(), n.rank());
    }
}
