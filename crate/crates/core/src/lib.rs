//! Exact arithmetic for skew PBW extensions of `k[t]` and `k[t1, t2]`.

pub mod automorphisms;
pub mod base_ring;
pub mod calculus;
pub mod certify;
pub mod error;
pub mod linalg;
pub mod normal_form;
pub mod presentation;
pub mod random;
pub mod rational;

pub use base_ring::{AffineMap, BaseExp, BasePoly};
pub use error::AlgebraError;
pub use normal_form::{Algebra, DiamondResidual, Letter, Monomial, NormalElement};
pub use presentation::{
    classify_case, CaseLabel, CaseTable, ExtensionPresentation, PresentationParts, ShapeViolation,
};
pub use rational::Rational;
pub use automorphisms::{GeneratorImages, ResidualReport};
pub use calculus::{Calculus, DifferentialForm, FormMonomial, IntegralGenerators};
pub use certify::{certify, CertifyOptions, SmoothnessCertificate, StageReport, Verdict};
