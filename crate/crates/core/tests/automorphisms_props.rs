mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spbw_core::automorphisms::{
    apply_auto, build_standard_autos, check_automorphism, check_pairwise_commute,
    check_respects_relations,
};
use spbw_core::random::random_element;
use spbw_core::rational::frac;
use spbw_core::{
    certify, classify_case, Algebra, BasePoly, Calculus, CertifyOptions, ExtensionPresentation,
    Rational, Verdict,
};

fn autos_pass(alg: &Algebra) -> bool {
    let nus = build_standard_autos(alg);
    nus.iter().all(|nu| check_respects_relations(alg, nu).all_zero)
        && nus.iter().all(|nu| check_automorphism(alg, nu))
        && check_pairwise_commute(alg, &nus).all_zero
}

#[test]
fn consistent_presentations_have_standard_automorphisms() {
    for (name, p) in common::consistent() {
        let alg = Algebra::new(p).unwrap();
        assert!(autos_pass(&alg), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn standard_autos_are_multiplicative(seed in any::<u64>(), which in 0usize..9) {
        let (name, p) = common::consistent().swap_remove(which);
        let alg = Algebra::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for nu in build_standard_autos(&alg) {
            for _ in 0..7 {
                let f = random_element(&mut rng, &alg, 4, 3);
                let g = random_element(&mut rng, &alg, 4, 3);
                let lhs = apply_auto(&alg, &nu, &alg.multiply(&f, &g));
                let rhs = alg.multiply(&apply_auto(&alg, &nu, &f), &apply_auto(&alg, &nu, &g));
                prop_assert_eq!(lhs, rhs, "{} {}", name, nu.name);
            }
        }
    }
}

#[test]
fn nu_omega_is_the_composite() {
    for (name, p) in common::consistent() {
        let alg = Algebra::new(p).unwrap();
        let calc = Calculus::new(&alg);
        let nus = build_standard_autos(&alg);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let a = random_element(&mut rng, &alg, 4, 4);
            let composite = nus.iter().rev().fold(a.clone(), |acc, nu| apply_auto(&alg, nu, &acc));
            assert_eq!(calc.nu_omega(&a), composite, "{name}");
        }
    }
}

/// The first entry of `xs` half the time, otherwise a uniform draw.
fn pick<R: Rng>(rng: &mut R, xs: &[(i64, i64)]) -> Rational {
    let (p, q) = if rng.gen_bool(0.5) {
        xs[0]
    } else {
        xs[rng.gen_range(0..xs.len())]
    };
    frac(p, q)
}

/// Small-parameter presentations over `k[t]` with `n` generators.
fn sweep(n: usize, count: usize, seed: u64) -> Vec<ExtensionPresentation> {
    let scales = [(1, 1), (2, 1), (1, 2), (-1, 1)];
    let shifts = [(0, 1), (1, 1), (3, 1)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut p = ExtensionPresentation::commutative(1, n);
            for i in 0..n {
                let c0 = pick(&mut rng, &shifts);
                let c1 = if rng.gen_bool(0.2) { frac(1, 1) } else { frac(0, 1) };
                p.set_sigma(i, 0, pick(&mut rng, &scales), pick(&mut rng, &shifts))
                    .set_p(i, BasePoly::from_coeffs(&[c0, c1]));
            }
            for i in 0..n {
                for j in i + 1..n {
                    p.set_c(i, j, pick(&mut rng, &scales));
                    if rng.gen_bool(0.3) {
                        p.set_q0(i, j, pick(&mut rng, &shifts));
                    }
                    for k in 0..n {
                        if rng.gen_bool(0.1) {
                            p.set_q(i, j, k, pick(&mut rng, &shifts));
                        }
                    }
                }
            }
            p
        })
        .collect()
}

/// Among presentations whose relations are consistent, a matched table row
/// implies the automorphism checks pass. The tables are not exhaustive, so a
/// presentation matching no row may still pass; such presentations must then
/// certify.
fn classification_sweep(n: usize, count: usize) {
    let opts = CertifyOptions {
        degree_bound: 4,
        trials: 20,
        seed: 0,
    };
    let (mut matched, mut unmatched_failing) = (0, 0);
    for p in sweep(n, count, 7 + n as u64) {
        assert_eq!(classify_case(&p), classify_case(&p));
        let alg = Algebra::new(p.clone()).unwrap();
        if !alg.check_pbw_diamond(3).is_empty() {
            continue;
        }
        let pass = autos_pass(&alg);
        if classify_case(&p).iter().any(|l| l.matched) {
            matched += 1;
            assert!(pass, "matched row without automorphisms: {:?}", p.to_parts());
        } else if pass {
            let cert = certify(&p, &opts);
            assert_eq!(cert.verdict, Verdict::Smooth, "{:?}", cert.failed_stage);
        } else {
            unmatched_failing += 1;
        }
    }
    assert!(matched > 0 && unmatched_failing > 0);
}

#[test]
fn classification_sweep_two_generators() {
    classification_sweep(2, 1500);
}

#[test]
fn classification_sweep_three_generators() {
    classification_sweep(3, 600);
}
