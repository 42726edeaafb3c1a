use proptest::prelude::*;
use spbw_core::base_ring::{divided_difference, substitute};
use spbw_core::rational::frac;
use spbw_core::{AffineMap, Algebra, BasePoly, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != frac(0, 1))
}

fn poly(arity: usize, max_deg: u32) -> impl Strategy<Value = BasePoly> {
    let exp = prop::collection::vec(0..=max_deg, arity);
    prop::collection::vec((exp, rational()), 0..5).prop_map(move |terms| {
        let mut p = BasePoly::zero(arity);
        for (e, c) in terms {
            let mut exp = [0u32; 2];
            exp[..arity].copy_from_slice(&e);
            p.add_term(exp, c);
        }
        p
    })
}

fn affine(arity: usize) -> impl Strategy<Value = AffineMap> {
    (
        prop::collection::vec(nonzero_rational(), arity),
        prop::collection::vec(rational(), arity),
    )
        .prop_map(|(a, b)| AffineMap::new(a, b).unwrap())
}

/// `σ` and `p` for which `x t1 t2 = x t2 t1` holds: either `p = 0`, or both
/// scales are 1 with equal shifts.
fn consistent_two_variable() -> impl Strategy<Value = (AffineMap, Rational)> {
    prop_oneof![
        affine(2).prop_map(|s| (s, frac(0, 1))),
        (rational(), rational()).prop_map(|(b, p)| {
            (AffineMap::new(vec![frac(1, 1); 2], vec![b.clone(), b]).unwrap(), p)
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn divided_difference_is_sigma_derivation(
        f in poly(1, 6), g in poly(1, 6), s in affine(1), p in poly(1, 2)
    ) {
        let lhs = divided_difference(&(&f * &g), &s, &p);
        let rhs = &(&substitute(&f, &s).unwrap() * &divided_difference(&g, &s, &p))
            + &(&divided_difference(&f, &s, &p) * &g);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn two_variable_delta_is_sigma_derivation(
        f in poly(2, 3), g in poly(2, 3), (s, p) in consistent_two_variable()
    ) {
        let mut pres = spbw_core::ExtensionPresentation::commutative(2, 1);
        pres.set_sigma(0, 0, s.scale(0).clone(), s.shift(0).clone())
            .set_sigma(0, 1, s.scale(1).clone(), s.shift(1).clone())
            .set_p(0, BasePoly::constant(2, p));
        let alg = Algebra::new(pres).unwrap();
        let lhs = alg.delta(0, &(&f * &g));
        let rhs = &(&substitute(&f, &s).unwrap() * &alg.delta(0, &g)) + &(&alg.delta(0, &f) * &g);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_is_ring_homomorphism(f in poly(2, 4), g in poly(2, 4), s in affine(2)) {
        let sf = substitute(&f, &s).unwrap();
        let sg = substitute(&g, &s).unwrap();
        prop_assert_eq!(substitute(&(&f + &g), &s).unwrap(), &sf + &sg);
        prop_assert_eq!(substitute(&(&f * &g), &s).unwrap(), &sf * &sg);
        prop_assert_eq!(substitute(&BasePoly::one(2), &s).unwrap(), BasePoly::one(2));
    }

    #[test]
    fn substitute_inverse_round_trip(f in poly(2, 5), s in affine(2)) {
        let there = substitute(&f, &s).unwrap();
        prop_assert_eq!(substitute(&there, &s.inverse()).unwrap(), f);
    }
}
