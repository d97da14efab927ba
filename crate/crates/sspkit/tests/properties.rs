//! Randomized algebraic properties.

use num_rational::BigRational;
use proptest::prelude::*;

use sspkit::poly::UniPoly;
use sspkit::scalar::Scalar;
use sspkit::symbols::TypeAIndex;

fn poly_strategy() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-9i64..=9, 1..8).prop_map(|v| UniPoly::from_i64_coeffs(&v))
}

proptest! {
    #[test]
    fn exact_division_round_trips(p in poly_strategy(), q in poly_strategy()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let prod = p.mul(&q).unwrap();
        prop_assert_eq!(prod.exact_div(&q).unwrap(), p.clone());
        prop_assert_eq!(prod.exact_div(&p).unwrap(), q);
    }

    #[test]
    fn quadratic_sign_matches_float(a in -1000i64..=1000, b in -1000i64..=1000) {
        let s = Scalar::root5(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        );
        let float = a as f64 + b as f64 * 5f64.sqrt();
        if a != 0 || b != 0 {
            prop_assert_eq!(s.sign() as f64, float.signum());
        } else {
            prop_assert_eq!(s.sign(), 0);
        }
    }

    #[test]
    fn partition_index_round_trip(mut parts in prop::collection::vec(1u32..=12, 1..8)) {
        parts.sort_by(|x, y| y.cmp(x));
        let idx = TypeAIndex::from_partition(&parts);
        prop_assert_eq!(idx.to_partition(), parts.clone());
        let n: u32 = parts.iter().sum();
        prop_assert_eq!(idx.rank(), n as i64);
    }

    #[test]
    fn valuation_additive(p in poly_strategy(), q in poly_strategy()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let vp = p.val_at_minus_one().unwrap();
        let vq = q.val_at_minus_one().unwrap();
        prop_assert_eq!(p.mul(&q).unwrap().val_at_minus_one().unwrap(), vp + vq);
    }
}
