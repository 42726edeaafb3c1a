mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spbw_core::random::{random_element, random_form};
use spbw_core::{Algebra, Calculus};

fn algebra(which: usize) -> (&'static str, Algebra) {
    let (name, p) = common::smooth().swap_remove(which);
    (name, Algebra::new(p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn wedge_is_associative(seed in any::<u64>(), which in 0usize..8, grades in (0usize..=2, 0usize..=1, 0usize..=1)) {
        let (name, alg) = algebra(which);
        let calc = Calculus::new(&alg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (i, j, k) = grades;
        let f = random_form(&mut rng, &calc, i, 2, 2);
        let g = random_form(&mut rng, &calc, j, 2, 2);
        let h = random_form(&mut rng, &calc, k, 2, 2);
        let left = calc.wedge(&calc.wedge(&f, &g), &h);
        let right = calc.wedge(&f, &calc.wedge(&g, &h));
        prop_assert_eq!(left, right, "{}", name);
    }

    #[test]
    fn functions_wedge_as_products(seed in any::<u64>(), which in 0usize..8) {
        let (name, alg) = algebra(which);
        let calc = Calculus::new(&alg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&mut rng, &alg, 3, 3);
        let w = random_form(&mut rng, &calc, 1, 2, 2);
        prop_assert_eq!(calc.wedge(&calc.function(a.clone()), &w), calc.left_action(&a, &w), "{}", name);
        prop_assert_eq!(calc.wedge(&w, &calc.function(a.clone())), calc.right_mul(&w, &a), "{}", name);
    }

    #[test]
    fn d_squares_to_zero_and_leibniz(seed in any::<u64>(), which in 0usize..8) {
        let (name, alg) = algebra(which);
        let calc = Calculus::new(&alg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_element(&mut rng, &alg, 6, 4);
        prop_assert!(calc.d(&calc.d0(&f)).is_zero(), "{}", name);
        let w = random_form(&mut rng, &calc, 1, 3, 3);
        prop_assert!(calc.d(&calc.d(&w)).is_zero(), "{}", name);
        let g = random_element(&mut rng, &alg, 3, 3);
        prop_assert!(calc.leibniz_residual(&f, &g).is_zero(), "{}", name);
    }

    #[test]
    fn volume_form_duality(seed in any::<u64>(), which in 0usize..8) {
        let (name, alg) = algebra(which);
        let calc = Calculus::new(&alg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vol = calc.volume();
        let a = random_element(&mut rng, &alg, 5, 4);
        prop_assert_eq!(calc.pi_omega(&calc.right_mul(&vol, &a)).unwrap(), a.clone(), "{}", name);
        prop_assert_eq!(
            calc.left_action(&a, &vol),
            calc.right_mul(&vol, &calc.nu_omega(&a)),
            "{}", name
        );
    }
}

#[test]
fn reconstruction_on_basis_and_random_forms() {
    for which in 0..8 {
        let (name, alg) = algebra(which);
        let calc = Calculus::new(&alg);
        let gens = calc.integral_generators();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for k in 0..=calc.top_grade() {
            let mut tests = gens.omega[k].clone();
            tests.extend((0..20).map(|_| random_form(&mut rng, &calc, k, 3, 3)));
            for t in &tests {
                assert!(calc.reconstruct_check(&gens, t).unwrap().is_zero(), "{name} grade {k}: {t}");
            }
        }
    }
}

#[test]
fn connected_on_consistent_presentations() {
    for which in 0..8 {
        let (name, alg) = algebra(which);
        assert_eq!(Calculus::new(&alg).connected_check(6), 1, "{name}");
    }
}

#[test]
fn leibniz_fails_with_foreign_q_terms() {
    let alg = Algebra::new(common::heisenberg()).unwrap();
    let calc = Calculus::new(&alg);
    assert!(!calc.leibniz_residual(&alg.gen(1), &alg.gen(0)).is_zero());
}
