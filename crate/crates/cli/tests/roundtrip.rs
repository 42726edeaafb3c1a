use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spbw_cli::expr;
use spbw_core::random::random_element;
use spbw_core::rational::{frac, rat};
use spbw_core::{Algebra, BasePoly, ExtensionPresentation};

fn algebras() -> Vec<Algebra> {
    let mut one = ExtensionPresentation::commutative(1, 3);
    one.set_sigma(0, 0, rat(2), frac(1, 3))
        .set_p(0, BasePoly::from_coeffs(&[rat(1), rat(1)]));
    let mut two = ExtensionPresentation::commutative(2, 2);
    two.set_sigma(0, 0, rat(2), rat(1)).set_c(0, 1, frac(-3, 2));
    vec![Algebra::new(one).unwrap(), Algebra::new(two).unwrap()]
}

#[test]
fn parse_pretty_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for alg in algebras() {
        for _ in 0..250 {
            let f = random_element(&mut rng, &alg, 5, 6);
            let text = f.to_string();
            assert_eq!(expr::reduce(&alg, &text).unwrap(), f, "{text}");
        }
    }
}

proptest! {
    #[test]
    fn parser_never_panics(s in "[-+*()tx0-9/ ]{0,24}") {
        let alg = &algebras()[0];
        let _ = expr::reduce(alg, &s);
    }
}
