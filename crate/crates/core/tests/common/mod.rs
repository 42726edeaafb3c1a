#![allow(dead_code)]

use spbw_core::rational::{frac, rat};
use spbw_core::{BasePoly, ExtensionPresentation};

pub fn lin(c0: i64, c1: i64) -> BasePoly {
    BasePoly::from_coeffs(&[rat(c0), rat(c1)])
}

/// `x t = t x + 1`.
pub fn weyl() -> ExtensionPresentation {
    let mut p = ExtensionPresentation::commutative(1, 1);
    p.set_p(0, BasePoly::constant(1, rat(1)));
    p
}

/// `x1 t = 2t x1 + t`, `x2 t = 3t x2 − t`, `x2 x1 = x1 x2`.
pub fn table1_i() -> ExtensionPresentation {
    let mut p = ExtensionPresentation::commutative(1, 2);
    p.set_sigma(0, 0, rat(2), rat(0))
        .set_sigma(1, 0, rat(3), rat(0))
        .set_p(0, lin(0, 1))
        .set_p(1, lin(0, -1));
    p
}

/// Both `σ_i` nontrivial, `p = 0`, `x2 x1 = 1/2 x1 x2`.
pub fn quantum_pair() -> ExtensionPresentation {
    let mut p = ExtensionPresentation::commutative(1, 2);
    p.set_sigma(0, 0, rat(2), rat(0))
        .set_sigma(1, 0, rat(3), rat(0))
        .set_c(0, 1, frac(1, 2));
    p
}

/// `a = 1`, `b1 = −b2 = 1`, constant `p`, `q0 = 5`.
pub fn table1_d() -> ExtensionPresentation {
    let mut p = ExtensionPresentation::commutative(1, 2);
    p.set_sigma(0, 0, rat(1), rat(1))
        .set_sigma(1, 0, rat(1), rat(-1))
        .set_p(0, BasePoly::constant(1, rat(2)))
        .set_p(1, BasePoly::constant(1, rat(3)))
        .set_q0(0, 1, rat(5));
    p
}

/// `x1 t = (2t + 1) x1 + t + 1`, `x2`, `x3` central.
pub fn table2_c() -> ExtensionPresentation {
    let mut p = ExtensionPresentation::commutative(1, 3);
    p.set_sigma(0, 0, rat(2), rat(1)).set_p(0, lin(1, 1));
    p
}

/// Heisenberg: `x2 x1 = x1 x2 + x3`, `x3` central, `t` central.
pub fn heisenberg() -> ExtensionPresentation {
    let mut p = ExtensionPresentation::commutative(1, 3);
    p.set_q(0, 1, 2, rat(1));
    p
}

/// Two base variables, `a = 1`, shifts `±1`, constant `p`, `q0 = 5`.
pub fn table4_a() -> ExtensionPresentation {
    let mut p = ExtensionPresentation::commutative(2, 2);
    p.set_sigma(0, 0, rat(1), rat(1))
        .set_sigma(0, 1, rat(1), rat(1))
        .set_sigma(1, 0, rat(1), rat(-1))
        .set_sigma(1, 1, rat(1), rat(-1))
        .set_p(0, BasePoly::constant(2, rat(2)))
        .set_p(1, BasePoly::constant(2, rat(3)))
        .set_q0(0, 1, rat(5));
    p
}

/// Two base variables, diagonal `σ_i` with compatible shifts, `x2 x1 = 7 x1 x2`.
pub fn table4_p() -> ExtensionPresentation {
    let mut p = ExtensionPresentation::commutative(2, 2);
    p.set_sigma(0, 0, rat(2), rat(1))
        .set_sigma(0, 1, rat(3), rat(2))
        .set_sigma(1, 0, rat(5), rat(4))
        .set_sigma(1, 1, rat(4), rat(3))
        .set_c(0, 1, rat(7));
    p
}

/// Presentations whose defining relations are consistent.
pub fn consistent() -> Vec<(&'static str, ExtensionPresentation)> {
    vec![
        ("commutative", ExtensionPresentation::commutative(1, 2)),
        ("weyl", weyl()),
        ("table1_i", table1_i()),
        ("quantum_pair", quantum_pair()),
        ("table1_d", table1_d()),
        ("table2_c", table2_c()),
        ("heisenberg", heisenberg()),
        ("table4_a", table4_a()),
        ("table4_p", table4_p()),
    ]
}

/// The consistent presentations that carry the standard calculus.
pub fn smooth() -> Vec<(&'static str, ExtensionPresentation)> {
    consistent().into_iter().filter(|(name, _)| *name != "heisenberg").collect()
}
