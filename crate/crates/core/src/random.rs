//! Seeded random elements, forms and presentations for property checks.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::base_ring::BasePoly;
use crate::calculus::{Calculus, DifferentialForm, FormMonomial};
use crate::normal_form::{Algebra, Monomial, NormalElement};
use crate::presentation::ExtensionPresentation;
use crate::rational::{frac, Rational};

/// A small nonzero rational `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 3`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = frac(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        if !r.is_zero() {
            return r;
        }
    }
}

/// A monomial of total degree at most `max_degree`.
pub fn random_monomial<R: Rng>(rng: &mut R, m: usize, n: usize, max_degree: u32) -> Monomial {
    let deg = rng.gen_range(0..=max_degree);
    let mut exps = vec![0u32; m + n];
    for _ in 0..deg {
        exps[rng.gen_range(0..m + n)] += 1;
    }
    let mut base = [0u32; 2];
    base[..m].copy_from_slice(&exps[..m]);
    Monomial {
        base,
        gens: exps[m..].to_vec(),
    }
}

pub fn random_base_poly<R: Rng>(rng: &mut R, m: usize, max_degree: u32, max_terms: usize) -> BasePoly {
    let mut p = BasePoly::zero(m);
    for _ in 0..rng.gen_range(0..=max_terms) {
        let mono = random_monomial(rng, m, 0, max_degree);
        p.add_term(mono.base, small_rational(rng));
    }
    p
}

/// Up to `max_terms` random terms of total degree at most `max_degree`.
pub fn random_element<R: Rng>(
    rng: &mut R,
    alg: &Algebra,
    max_degree: u32,
    max_terms: usize,
) -> NormalElement {
    let mut f = alg.zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let mono = random_monomial(rng, alg.m(), alg.n(), max_degree);
        f.add_term(&mono, small_rational(rng));
    }
    f
}

/// A grade-`k` form over up to three basis wedges with random coefficients.
pub fn random_form<R: Rng>(
    rng: &mut R,
    calc: &Calculus,
    grade: usize,
    max_degree: u32,
    max_terms: usize,
) -> DifferentialForm {
    let total = calc.top_grade();
    let mut out = calc.zero_form(grade);
    let slots: Vec<usize> = (0..total).collect();
    for _ in 0..rng.gen_range(1..=3) {
        let chosen: Vec<usize> = slots.choose_multiple(rng, grade).copied().collect();
        let coeff = random_element(rng, calc.algebra(), max_degree, max_terms);
        out = out.add(&calc.basis(FormMonomial::from_slots(&chosen), coeff));
    }
    out
}

/// A presentation over `k[t]` with random `σ_i`, `p_i` and commuting generators.
pub fn random_univariate_presentation<R: Rng>(rng: &mut R, n: usize) -> ExtensionPresentation {
    let mut p = ExtensionPresentation::commutative(1, n);
    for i in 0..n {
        let b = if rng.gen_bool(0.3) {
            Rational::zero()
        } else {
            small_rational(rng)
        };
        let a = if rng.gen_bool(0.3) {
            Rational::from_integer(1.into())
        } else {
            small_rational(rng)
        };
        p.set_sigma(i, 0, a, b)
            .set_p(i, random_base_poly(rng, 1, 3, 3));
    }
    p
}
