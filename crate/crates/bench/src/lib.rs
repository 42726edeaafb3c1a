//! Sample presentations shared by the benchmarks.

use spbw_core::rational::rat;
use spbw_core::{BasePoly, ExtensionPresentation};

/// `x t = 2 t x + 1`.
pub fn univariate_skew() -> ExtensionPresentation {
    let mut p = ExtensionPresentation::commutative(1, 1);
    p.set_sigma(0, 0, rat(2), rat(0))
        .set_p(0, BasePoly::constant(1, rat(1)));
    p
}

/// Three quantum-commuting generators over `k[t]`.
pub fn quantum_three() -> ExtensionPresentation {
    let mut p = ExtensionPresentation::commutative(1, 3);
    for i in 0..3 {
        p.set_sigma(i, 0, rat(i as i64 + 2), rat(0));
    }
    p.set_c(0, 1, rat(2)).set_c(0, 2, rat(3)).set_c(1, 2, rat(5));
    p
}
