//! The standard maps `ν_{t_j}`, `ν_{x_i}` and their extension checks.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::base_ring::BasePoly;
use crate::normal_form::{Algebra, Letter, NormalElement};
use crate::rational::Rational;

/// Images of every letter under an algebra map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorImages {
    pub name: String,
    pub base: Vec<NormalElement>,
    pub gens: Vec<NormalElement>,
}

impl GeneratorImages {
    pub fn identity(alg: &Algebra) -> Self {
        GeneratorImages {
            name: "id".into(),
            base: (0..alg.m()).map(|j| alg.base_var(j)).collect(),
            gens: (0..alg.n()).map(|i| alg.gen(i)).collect(),
        }
    }

    pub fn image(&self, l: Letter) -> &NormalElement {
        match l {
            Letter::T(j) => &self.base[j],
            Letter::X(i) => &self.gens[i],
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationResidual {
    pub relation: String,
    pub residual: NormalElement,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ResidualReport {
    pub residuals: Vec<RelationResidual>,
    pub all_zero: bool,
}

impl ResidualReport {
    fn from_entries(residuals: Vec<RelationResidual>) -> Self {
        let all_zero = residuals.iter().all(|r| r.residual.is_zero());
        ResidualReport {
            residuals,
            all_zero,
        }
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &RelationResidual> {
        self.residuals.iter().filter(|r| !r.residual.is_zero())
    }
}

fn nu_name(alg: &Algebra, l: Letter) -> String {
    format!("nu_{}", l.name(alg.m()))
}

/// `ν_{t_1..t_m}` followed by `ν_{x_1..x_n}`.
pub fn build_standard_autos(alg: &Algebra) -> Vec<GeneratorImages> {
    let pres = alg.presentation();
    let (m, n) = (alg.m(), alg.n());
    let mut out = Vec::with_capacity(m + n);
    for l in 0..m {
        let gens = (0..n)
            .map(|k| {
                if m == 1 {
                    let mut img = alg.gen(k).scale(pres.a(k, 0));
                    img.add_assign(&alg.from_base(pres.p(k).derivative()));
                    img
                } else {
                    alg.gen(k).scale(pres.a(k, l))
                }
            })
            .collect();
        out.push(GeneratorImages {
            name: nu_name(alg, Letter::T(l)),
            base: (0..m).map(|j| alg.base_var(j)).collect(),
            gens,
        });
    }
    for i in 0..n {
        let inv = alg.sigma(i).inverse();
        let base = (0..m).map(|j| alg.from_base(inv.image_of_var(j))).collect();
        let gens = (0..n)
            .map(|j| {
                if i == j {
                    return alg.gen(j);
                }
                let c = pres.c(i, j);
                let mut img = alg.gen(j).scale(&c);
                let shift = if i < j {
                    pres.q(i, j, Some(i))
                } else {
                    let ci = pres.c(j, i).recip();
                    -(ci * pres.q(j, i, Some(i)))
                };
                img.add_assign(&alg.scalar(shift));
                img
            })
            .collect();
        out.push(GeneratorImages {
            name: nu_name(alg, Letter::X(i)),
            base,
            gens,
        });
    }
    out
}

/// Applies a letter map multiplicatively, caching powers of images.
pub struct AutoApplier<'a> {
    alg: &'a Algebra,
    nu: GeneratorImages,
    powers: HashMap<Letter, Vec<NormalElement>>,
}

impl<'a> AutoApplier<'a> {
    pub fn new(alg: &'a Algebra, nu: &GeneratorImages) -> Self {
        AutoApplier {
            alg,
            nu: nu.clone(),
            powers: HashMap::new(),
        }
    }

    pub fn images(&self) -> &GeneratorImages {
        &self.nu
    }

    fn power(&mut self, l: Letter, e: u32) -> NormalElement {
        let alg = self.alg;
        let img = self.nu.image(l).clone();
        let list = self.powers.entry(l).or_insert_with(|| vec![alg.one()]);
        while list.len() <= e as usize {
            let next = alg.multiply(list.last().unwrap(), &img);
            list.push(next);
        }
        list[e as usize].clone()
    }

    fn base(&mut self, r: &BasePoly) -> NormalElement {
        let mut out = self.alg.zero();
        for (e, c) in r.terms() {
            let mut term = self.power(Letter::T(0), e[0]);
            if self.alg.m() == 2 && e[1] > 0 {
                term = self.alg.multiply(&term, &self.power(Letter::T(1), e[1]));
            }
            out.add_assign(&term.scale(c));
        }
        out
    }

    pub fn apply(&mut self, f: &NormalElement) -> NormalElement {
        let mut out = self.alg.zero();
        for (alpha, r) in f.by_gens() {
            let mut term = self.base(r);
            for (i, &e) in alpha.iter().enumerate() {
                if e > 0 {
                    term = self.alg.multiply(&term, &self.power(Letter::X(i), e));
                }
            }
            out.add_assign(&term);
        }
        out
    }
}

/// `ν(f)` with `ν` extended multiplicatively from the letter images.
pub fn apply_auto(alg: &Algebra, nu: &GeneratorImages, f: &NormalElement) -> NormalElement {
    AutoApplier::new(alg, nu).apply(f)
}

/// The images of `outer ∘ inner`.
pub fn compose(alg: &Algebra, outer: &GeneratorImages, inner: &GeneratorImages) -> GeneratorImages {
    let mut app = AutoApplier::new(alg, outer);
    GeneratorImages {
        name: format!("{}∘{}", outer.name, inner.name),
        base: inner.base.iter().map(|f| app.apply(f)).collect(),
        gens: inner.gens.iter().map(|f| app.apply(f)).collect(),
    }
}

/// Residuals `ν(L) − ν(R)` over every defining relation `L = R`.
pub fn check_respects_relations(alg: &Algebra, nu: &GeneratorImages) -> ResidualReport {
    let (m, n) = (alg.m(), alg.n());
    let mut app = AutoApplier::new(alg, nu);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..m {
            let lhs = alg.multiply(nu.image(Letter::X(i)), nu.image(Letter::T(j)));
            let rhs = app.apply(&alg.left_mul_gen(i, &alg.base_var(j)));
            entries.push(RelationResidual {
                relation: format!("{}*{}", Letter::X(i).name(m), Letter::T(j).name(m)),
                residual: lhs.sub(&rhs),
            });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = alg.multiply(nu.image(Letter::X(j)), nu.image(Letter::X(i)));
            let rhs = app.apply(&alg.mul_gen_gen(j, i));
            entries.push(RelationResidual {
                relation: format!("{}*{}", Letter::X(j).name(m), Letter::X(i).name(m)),
                residual: lhs.sub(&rhs),
            });
        }
    }
    if m == 2 {
        let lhs = alg.multiply(&nu.base[1], &nu.base[0]);
        let rhs = alg.multiply(&nu.base[0], &nu.base[1]);
        entries.push(RelationResidual {
            relation: "t2*t1".into(),
            residual: lhs.sub(&rhs),
        });
    }
    ResidualReport::from_entries(entries)
}

/// Splits `f` as `λ·x_i + r` with `r` free of `x_i, …, x_n`.
fn triangular_part(alg: &Algebra, f: &NormalElement, i: usize) -> Option<(Rational, NormalElement)> {
    let mut lambda = Rational::zero();
    let mut rest = alg.zero();
    for (alpha, r) in f.by_gens() {
        let top = alpha.iter().rposition(|&e| e > 0);
        match top {
            Some(k) if k == i => {
                let unit = alpha.iter().sum::<u32>() == 1;
                if !unit || !r.is_constant() {
                    return None;
                }
                lambda = r.constant_term();
            }
            Some(k) if k > i => return None,
            _ => rest.add_coeff(alpha.clone(), r.clone()),
        }
    }
    if lambda.is_zero() {
        None
    } else {
        Some((lambda, rest))
    }
}

/// Inverse images for maps of triangular affine shape.
pub fn triangular_inverse(alg: &Algebra, nu: &GeneratorImages) -> Option<GeneratorImages> {
    let m = alg.m();
    let mut base = Vec::with_capacity(m);
    for j in 0..m {
        let img = &nu.base[j];
        if img.gen_degree().unwrap_or(0) > 0 {
            return None;
        }
        let r = img.base_coeff(&vec![0; alg.n()]);
        let mut alpha = Rational::zero();
        for (e, c) in r.terms() {
            let mut other = *e;
            other[j] = 0;
            match (e[j], other == [0, 0]) {
                (0, true) => {}
                (1, true) => alpha = c.clone(),
                _ => return None,
            }
        }
        if alpha.is_zero() {
            return None;
        }
        let beta = r.constant_term();
        let inv = &BasePoly::var(m, j) - &BasePoly::constant(m, beta);
        base.push(alg.from_base(inv.scale(&alpha.recip())));
    }
    let mut inv = GeneratorImages {
        name: format!("{}^-1", nu.name),
        base,
        gens: (0..alg.n()).map(|i| alg.gen(i)).collect(),
    };
    for i in 0..alg.n() {
        let (lambda, rest) = triangular_part(alg, &nu.gens[i], i)?;
        let pulled = apply_auto(alg, &inv, &rest);
        inv.gens[i] = alg.gen(i).sub(&pulled).scale(&lambda.recip());
    }
    Some(inv)
}

/// True iff `ν` has a triangular inverse and both composites are the identity on letters.
pub fn check_automorphism(alg: &Algebra, nu: &GeneratorImages) -> bool {
    let Some(inv) = triangular_inverse(alg, nu) else {
        return false;
    };
    let id = GeneratorImages::identity(alg);
    let same = |g: &GeneratorImages| g.base == id.base && g.gens == id.gens;
    same(&compose(alg, nu, &inv)) && same(&compose(alg, &inv, nu))
}

/// `(ν∘μ)(g) − (μ∘ν)(g)` for every pair and every letter `g`.
pub fn check_pairwise_commute(alg: &Algebra, nus: &[GeneratorImages]) -> ResidualReport {
    let mut entries = Vec::new();
    for a in 0..nus.len() {
        for b in a + 1..nus.len() {
            let ab = compose(alg, &nus[a], &nus[b]);
            let ba = compose(alg, &nus[b], &nus[a]);
            for l in alg.letters() {
                entries.push(RelationResidual {
                    relation: format!("[{}, {}]({})", nus[a].name, nus[b].name, l.name(alg.m())),
                    residual: ab.image(l).sub(ba.image(l)),
                });
            }
        }
    }
    ResidualReport::from_entries(entries)
}

/// True when every letter image equals the letter itself.
pub fn is_identity(alg: &Algebra, nu: &GeneratorImages) -> bool {
    let id = GeneratorImages::identity(alg);
    nu.base == id.base && nu.gens == id.gens
}
