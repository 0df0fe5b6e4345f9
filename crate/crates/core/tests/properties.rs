mod common;

use lucaskit::exec::Exec;
use lucaskit::lucas;
use lucaskit::shapes::{shape_weight, shape_weight_with, Shape, Strip};
use lucaskit::Poly2;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly2> {
    prop::collection::vec((0u32..5, 0u32..4, -6i64..7), 0..6).prop_map(Poly2::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn exact_division_undoes_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in poly()) {
        prop_assert_eq!(Poly2::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), s in -3i64..4, t in -3i64..4) {
        prop_assert_eq!((&a * &b).eval_i64(s, t), a.eval_i64(s, t) * b.eval_i64(s, t));
    }

    #[test]
    fn lucasnomial_matches_division_free_oracle(n in 0u32..14, k in 0u32..14) {
        let k = k.min(n);
        prop_assert_eq!(lucas::lucasnomial(n, k as i64).unwrap(), common::Lucasnomials::new().get(n, k));
    }

    #[test]
    fn lucas_addition_formula(m in 1u32..25, n in 1u32..25) {
        // {m+n} = {m+1}{n} + t{m}{n-1}
        let lhs = lucas::lucas(m + n);
        let rhs = &(&lucas::lucas(m + 1) * &lucas::lucas(n)) + &(&Poly2::t() * &(&lucas::lucas(m) * &lucas::lucas(n - 1)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lucas_matches_closed_form(n in 0u32..40) {
        prop_assert_eq!(lucas::lucas(n), common::lucas(n));
    }

    #[test]
    fn lucasnomials_are_nonnegative_and_symmetric(n in 0u32..16, k in 0u32..16) {
        let k = k.min(n) as i64;
        let p = lucas::lucasnomial(n, k).unwrap();
        prop_assert!(p.has_nonnegative_coeffs());
        prop_assert_eq!(p, lucas::lucasnomial(n, n as i64 - k).unwrap());
    }

    #[test]
    fn specializes_to_binomials(n in 0u32..40, k in 0u32..40) {
        let k = k.min(n);
        let v = lucas::lucasnomial(n, k as i64).unwrap().eval_i64(2, -1);
        prop_assert_eq!(v, BigInt::from(common::binomial(n, k)));
    }

    #[test]
    fn d_lucasnomial_matches_oracle(n in 0u32..6, k in 0u32..6, d in 1u32..4) {
        let k = k.min(n);
        prop_assert_eq!(lucas::d_lucasnomial(n, k as i64, d).unwrap(), common::d_lucasnomial(n, k, d));
    }

    #[test]
    fn lucas_divides_multiples(m in 1u32..12, k in 1u32..5) {
        let q = lucas::lucas_divides(m, k * m);
        prop_assert!(q.is_some());
        prop_assert!(q.unwrap().has_nonnegative_coeffs());
    }

    #[test]
    fn strip_masks_round_trip(len in 0u32..20, bits in any::<u64>()) {
        let s = Strip::from_mask(len, bits);
        prop_assert_eq!(s.len(), len);
        prop_assert_eq!(Strip::from_mask(len, s.domino_mask()), s.clone());
        prop_assert_eq!(s.to_string().parse::<Strip>().unwrap(), s);
    }

    #[test]
    fn strategies_give_the_same_weight(rows in prop::collection::vec(0u32..6, 1..5)) {
        let mut outer = rows.clone();
        outer.sort_unstable_by(|a, b| b.cmp(a));
        let shape = Shape::new(outer, vec![]).unwrap();
        prop_assert_eq!(shape_weight_with(&shape, Exec::Sequential), shape_weight_with(&shape, Exec::Parallel));
    }
}

#[test]
fn staircase_weight_is_lucastorial() {
    // a row of length m has weight {m+1}, so delta_n weighs {n}!
    for n in 0..=8 {
        assert_eq!(shape_weight(&Shape::staircase(n)), lucas::lucastorial(n));
    }
}
