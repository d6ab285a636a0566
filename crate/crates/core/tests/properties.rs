//! Randomized properties checked against independent computations.

mod common;

use gradus::ring::{FieldElement, FieldKind, Monomial, Polynomial};
use gradus::series::{monomial_ideal_numerator, poincare, poincare_with, PivotRule};
use gradus::ModulePresentation;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn element(kind: FieldKind, n: i64, d: i64) -> FieldElement {
    kind.from_rational(&BigRational::new(BigInt::from(n), BigInt::from(d))).unwrap()
}

fn field_axioms(kind: FieldKind, a: &FieldElement, b: &FieldElement, c: &FieldElement) {
    let zero = kind.zero();
    let one = kind.one();
    assert_eq!(&(a + b) + c, a + &(b + c));
    assert_eq!(&(a * b) * c, a * &(b * c));
    assert_eq!(a + b, b + a);
    assert_eq!(a * b, b * a);
    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    assert_eq!(a + &zero, a.clone());
    assert_eq!(a * &one, a.clone());
    assert_eq!(a + &(-a), zero);
    assert_eq!(a - b, a + &(-b));
    match a.inv() {
        Some(i) => assert_eq!(a * &i, one),
        None => assert!(a.is_zero()),
    }
}

fn random_module(seed: u64) -> ModulePresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = if seed.is_multiple_of(3) { FieldKind::Prime(7) } else { FieldKind::Rationals };
    let ring = common::random_ring(&mut rng, field);
    if seed.is_multiple_of(2) {
        ModulePresentation::cyclic(&ring, &common::random_ideal(&mut rng, &ring)).unwrap()
    } else {
        let shifts = vec![0, 1];
        let cols = (0..2).map(|_| common::random_column(&mut rng, &ring, &shifts)).collect();
        ModulePresentation::new(&ring, shifts, cols).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn rational_field_axioms(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20, e in -50i64..50, f in 1i64..20) {
        let k = FieldKind::Rationals;
        field_axioms(k, &element(k, a, b), &element(k, c, d), &element(k, e, f));
    }

    #[test]
    fn prime_field_axioms(a in any::<i64>(), b in any::<i64>(), c in any::<i64>(), p in prop::sample::select(vec![2u32, 3, 101, 32003, 2147483647])) {
        let k = FieldKind::prime(p).unwrap();
        field_axioms(k, &k.from_i64(a), &k.from_i64(b), &k.from_i64(c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_matches_linear_algebra(seed in any::<u64>()) {
        let m = random_module(seed);
        let lo = m.min_shift().unwrap();
        let dims = poincare(&m).dims(lo - 2, lo + 12);
        for (k, j) in (lo - 2..=lo + 12).enumerate() {
            prop_assert_eq!(dims[k], m.component_basis(j).dim as i64, "degree {}", j);
        }
    }

    #[test]
    fn series_independent_of_pivot(seed in any::<u64>()) {
        let m = random_module(seed);
        let a = poincare_with(&m, PivotRule::MostFrequent);
        let b = poincare_with(&m, PivotRule::FirstVariable);
        prop_assert!(a.same_series(&b));
    }

    #[test]
    fn relations_reduce_to_zero(seed in any::<u64>()) {
        let m = random_module(seed);
        let gb = m.groebner_basis();
        for r in m.relation_elements() {
            prop_assert!(gb.contains(&r));
        }
    }

    #[test]
    fn numerator_independent_of_pivot_and_order(seed in any::<u64>()) {
        let (ring, mut gens) = common::monomial_instances(1, seed).pop().unwrap();
        let a = monomial_ideal_numerator(&gens, ring.weights(), PivotRule::MostFrequent);
        gens.reverse();
        let b = monomial_ideal_numerator(&gens, ring.weights(), PivotRule::FirstVariable);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn homogeneous_components_recombine(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = common::random_ring(&mut rng, FieldKind::Rationals);
        let mut f = Polynomial::zero(&ring);
        for d in 0..4 {
            f = f.add(&common::random_homogeneous(&mut rng, &ring, d)).unwrap();
        }
        let mut sum = Polynomial::zero(&ring);
        for (d, g) in f.homogeneous_components() {
            prop_assert_eq!(g.homogeneity().degree(), Some(d));
            sum = sum.add(&g).unwrap();
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn degree_is_additive(seed in any::<u64>(), d in 0i64..5, e in 0i64..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = common::random_ring(&mut rng, FieldKind::Rationals);
        let f = common::random_homogeneous(&mut rng, &ring, d);
        let g = common::random_homogeneous(&mut rng, &ring, e);
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!(f.mul(&g).unwrap().homogeneity().degree(), Some(d + e));
        let m = Monomial::one(ring.nvars());
        prop_assert_eq!(ring.weighted_degree(&m), 0);
    }
}
