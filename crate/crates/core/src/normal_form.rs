//! Left normal forms `Σ r(t) x^α` and the rewriting engine.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::base_ring::{
    base_var_name, divided_difference, power_difference, substitute, write_base_monomial, AffineMap,
    BaseExp, BasePoly,
};
use crate::error::AlgebraError;
use crate::presentation::ExtensionPresentation;
use crate::rational::{format_rational, Rational};

/// `t^base x^gens`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub base: BaseExp,
    pub gens: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.base[0] + self.base[1] + self.gens.iter().sum::<u32>()
    }
}

/// Degree-lexicographic: total degree, then exponents with base variables first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.base.cmp(&other.base))
            .then_with(|| self.gens.cmp(&other.gens))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Algebra element with base coefficients on the left, grouped by `x^α`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormalElement {
    m: usize,
    n: usize,
    coeffs: BTreeMap<Vec<u32>, BasePoly>,
}

impl NormalElement {
    pub fn zero(m: usize, n: usize) -> Self {
        NormalElement {
            m,
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_base(n: usize, r: BasePoly) -> Self {
        let m = r.arity();
        let mut out = Self::zero(m, n);
        out.add_coeff(vec![0; n], r);
        out
    }

    pub fn scalar(m: usize, n: usize, c: Rational) -> Self {
        Self::from_base(n, BasePoly::constant(m, c))
    }

    pub fn one(m: usize, n: usize) -> Self {
        Self::scalar(m, n, Rational::one())
    }

    pub fn monomial(m: usize, n: usize, mono: &Monomial, c: Rational) -> Self {
        assert_eq!(mono.gens.len(), n);
        let mut out = Self::zero(m, n);
        out.add_coeff(mono.gens.clone(), BasePoly::monomial(m, mono.base, c));
        out
    }

    /// The generator `x_{i+1}`.
    pub fn gen(m: usize, n: usize, i: usize) -> Self {
        let mut g = vec![0; n];
        g[i] = 1;
        let mut out = Self::zero(m, n);
        out.add_coeff(g, BasePoly::one(m));
        out
    }

    /// The base variable `t_{j+1}`.
    pub fn base_var(m: usize, n: usize, j: usize) -> Self {
        Self::from_base(n, BasePoly::var(m, j))
    }

    pub fn base_arity(&self) -> usize {
        self.m
    }

    pub fn num_generators(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_coeff(&mut self, gens: Vec<u32>, r: BasePoly) {
        if r.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&gens) {
            Some(slot) => {
                *slot = &*slot + &r;
                if slot.is_zero() {
                    self.coeffs.remove(&gens);
                }
            }
            None => {
                self.coeffs.insert(gens, r);
            }
        }
    }

    pub fn add_term(&mut self, mono: &Monomial, c: Rational) {
        self.add_coeff(mono.gens.clone(), BasePoly::monomial(self.m, mono.base, c));
    }

    /// `(x^α, r_α(t))` pairs.
    pub fn by_gens(&self) -> impl Iterator<Item = (&Vec<u32>, &BasePoly)> {
        self.coeffs.iter()
    }

    /// Terms in ascending degree-lex order.
    pub fn terms(&self) -> Vec<(Monomial, Rational)> {
        let mut out: Vec<(Monomial, Rational)> = self
            .coeffs
            .iter()
            .flat_map(|(g, r)| {
                r.terms().map(move |(e, c)| {
                    (
                        Monomial {
                            base: *e,
                            gens: g.clone(),
                        },
                        c.clone(),
                    )
                })
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.values().map(BasePoly::num_terms).sum()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.coeffs
            .get(&mono.gens)
            .map(|r| r.coeff(mono.base))
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `x^α` in the base ring.
    pub fn base_coeff(&self, gens: &[u32]) -> BasePoly {
        self.coeffs
            .get(gens)
            .cloned()
            .unwrap_or_else(|| BasePoly::zero(self.m))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs
            .iter()
            .map(|(g, r)| g.iter().sum::<u32>() + r.degree().unwrap_or(0))
            .max()
    }

    /// Degree in the generators only.
    pub fn gen_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|g| g.iter().sum::<u32>()).max()
    }

    /// The constant term if the element is a scalar.
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (g, r) = self.coeffs.iter().next().unwrap();
                if g.iter().all(|&e| e == 0) && r.is_constant() {
                    Some(r.constant_term())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.m, self.n);
        }
        NormalElement {
            m: self.m,
            n: self.n,
            coeffs: self.coeffs.iter().map(|(g, r)| (g.clone(), r.scale(c))).collect(),
        }
    }

    /// `r · self` for a base polynomial `r` (left multiplication).
    pub fn base_mul(&self, r: &BasePoly) -> Self {
        let mut out = Self::zero(self.m, self.n);
        if r.is_zero() {
            return out;
        }
        for (g, c) in &self.coeffs {
            out.add_coeff(g.clone(), r * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!((self.m, self.n), (other.m, other.n), "shape mismatch");
        for (g, r) in &other.coeffs {
            self.add_coeff(g.clone(), r.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }
}

fn gen_name(i: usize) -> String {
    format!("x{}", i + 1)
}

fn format_monomial_factors(m: usize, mono: &Monomial) -> Vec<String> {
    let mut out = Vec::new();
    write_base_monomial(m, &mono.base, &mut out);
    for (i, &e) in mono.gens.iter().enumerate() {
        match e {
            0 => {}
            1 => out.push(gen_name(i)),
            _ => out.push(format!("{}^{}", gen_name(i), e)),
        }
    }
    out
}

/// Canonical text: terms in descending degree-lex order joined by ` + ` / ` - `.
impl fmt::Display for NormalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mono, c)) in terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            let factors = format_monomial_factors(self.m, mono);
            let body = if factors.is_empty() {
                format_rational(&abs)
            } else if abs.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", format_rational(&abs), factors.join("*"))
            };
            match (idx == 0, neg) {
                (true, true) => write!(f, "-{}", body)?,
                (true, false) => write!(f, "{}", body)?,
                (false, true) => write!(f, " - {}", body)?,
                (false, false) => write!(f, " + {}", body)?,
            }
        }
        Ok(())
    }
}

impl serde::Serialize for NormalElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A letter of a word over `{t_1.., x_1..}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    T(usize),
    X(usize),
}

impl Letter {
    pub fn name(&self, m: usize) -> String {
        match *self {
            Letter::T(j) => base_var_name(m, j),
            Letter::X(i) => gen_name(i),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DiamondResidual {
    pub word: Vec<Letter>,
    /// Length of the left factor.
    pub split: usize,
    /// `NF(u)·NF(v) − NF(w)` with `NF(w)` reduced right to left.
    pub residual: NormalElement,
}

impl DiamondResidual {
    pub fn word_text(&self, m: usize) -> String {
        self.word.iter().map(|l| l.name(m)).collect::<Vec<_>>().join("*")
    }
}

/// Rewriting engine bound to one valid presentation.
pub struct Algebra {
    pres: ExtensionPresentation,
    sigma: Vec<AffineMap>,
    gen_cache: Mutex<HashMap<(usize, Vec<u32>), NormalElement>>,
    steps: AtomicU64,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra::new(self.pres.clone()).expect("already validated")
    }
}

impl Algebra {
    pub fn new(pres: ExtensionPresentation) -> Result<Self, AlgebraError> {
        let violations = pres.validate_shape();
        if let Some(v) = violations.first() {
            return Err(AlgebraError::InvalidPresentation(v.to_string()));
        }
        let sigma = (0..pres.num_generators()).map(|i| pres.sigma(i)).collect();
        Ok(Algebra {
            pres,
            sigma,
            gen_cache: Mutex::new(HashMap::new()),
            steps: AtomicU64::new(0),
        })
    }

    pub fn presentation(&self) -> &ExtensionPresentation {
        &self.pres
    }

    pub fn m(&self) -> usize {
        self.pres.base_arity()
    }

    pub fn n(&self) -> usize {
        self.pres.num_generators()
    }

    pub fn sigma(&self, i: usize) -> &AffineMap {
        &self.sigma[i]
    }

    /// Number of generator-past-generator rewriting steps performed so far.
    pub fn rewrite_steps(&self) -> u64 {
        self.steps.load(AtomicOrdering::Relaxed)
    }

    pub fn zero(&self) -> NormalElement {
        NormalElement::zero(self.m(), self.n())
    }

    pub fn one(&self) -> NormalElement {
        NormalElement::one(self.m(), self.n())
    }

    pub fn scalar(&self, c: Rational) -> NormalElement {
        NormalElement::scalar(self.m(), self.n(), c)
    }

    pub fn gen(&self, i: usize) -> NormalElement {
        NormalElement::gen(self.m(), self.n(), i)
    }

    pub fn base_var(&self, j: usize) -> NormalElement {
        NormalElement::base_var(self.m(), self.n(), j)
    }

    pub fn from_base(&self, r: BasePoly) -> NormalElement {
        NormalElement::from_base(self.n(), r)
    }

    pub fn letter(&self, l: Letter) -> NormalElement {
        match l {
            Letter::T(j) => self.base_var(j),
            Letter::X(i) => self.gen(i),
        }
    }

    pub fn letters(&self) -> Vec<Letter> {
        (0..self.m())
            .map(Letter::T)
            .chain((0..self.n()).map(Letter::X))
            .collect()
    }

    /// `δ_i(r)`, the σ_i-derivation with `δ_i(t_j) = p_i`.
    pub fn delta(&self, i: usize, r: &BasePoly) -> BasePoly {
        let m = self.m();
        let s = &self.sigma[i];
        let p = self.pres.p(i);
        if m == 1 {
            return divided_difference(r, s, p);
        }
        let mut out = BasePoly::zero(m);
        for (e, c) in r.terms() {
            let t1 = BasePoly::monomial(m, [e[0], 0], Rational::one());
            let t2 = BasePoly::monomial(m, [0, e[1]], Rational::one());
            let s_t1 = substitute(&t1, s).expect("arity");
            let d1 = power_difference(m, s, 0, e[0]);
            let d2 = power_difference(m, s, 1, e[1]);
            let term = &(&s_t1 * &d2) + &(&d1 * &t2);
            out = &out + &(&term * p).scale(c);
        }
        out
    }

    /// Normal form of `x_i · x^β`.
    fn gen_times_monomial(&self, i: usize, beta: &[u32]) -> NormalElement {
        let key = (i, beta.to_vec());
        if let Some(hit) = self.gen_cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let n = self.n();
        let out = match beta.iter().position(|&e| e > 0) {
            Some(k) if k < i => {
                self.steps.fetch_add(1, AtomicOrdering::Relaxed);
                let mut rest = beta.to_vec();
                rest[k] -= 1;
                let q = self.pres.q_vec(k, i);
                let c = self.pres.c_upper(k, i);
                let mut acc = self
                    .left_mul_gen(k, &self.gen_times_monomial(i, &rest))
                    .scale(c);
                let rest_elem = {
                    let mut e = self.zero();
                    e.add_coeff(rest.clone(), BasePoly::one(self.m()));
                    e
                };
                acc.add_assign(&rest_elem.scale(&q[0]));
                for l in 0..n {
                    if !q[l + 1].is_zero() {
                        acc.add_assign(&self.gen_times_monomial(l, &rest).scale(&q[l + 1]));
                    }
                }
                acc
            }
            _ => {
                let mut g = beta.to_vec();
                g[i] += 1;
                let mut e = self.zero();
                e.add_coeff(g, BasePoly::one(self.m()));
                e
            }
        };
        self.gen_cache.lock().unwrap().insert(key, out.clone());
        out
    }

    /// `x_i · f`.
    pub fn left_mul_gen(&self, i: usize, f: &NormalElement) -> NormalElement {
        let s = &self.sigma[i];
        let mut out = self.zero();
        for (beta, r) in f.by_gens() {
            let sr = substitute(r, s).expect("arity");
            out.add_assign(&self.gen_times_monomial(i, beta).base_mul(&sr));
            let dr = self.delta(i, r);
            if !dr.is_zero() {
                out.add_coeff(beta.clone(), dr);
            }
        }
        out
    }

    /// `t_j · f`.
    pub fn left_mul_base(&self, j: usize, f: &NormalElement) -> NormalElement {
        f.base_mul(&BasePoly::var(self.m(), j))
    }

    pub fn left_mul_letter(&self, l: Letter, f: &NormalElement) -> NormalElement {
        match l {
            Letter::T(j) => self.left_mul_base(j, f),
            Letter::X(i) => self.left_mul_gen(i, f),
        }
    }

    /// `x^α · g`.
    pub fn left_mul_gens(&self, alpha: &[u32], g: &NormalElement) -> NormalElement {
        let mut h = g.clone();
        for i in (0..self.n()).rev() {
            for _ in 0..alpha[i] {
                h = self.left_mul_gen(i, &h);
            }
        }
        h
    }

    /// Normal form of `f·g`.
    pub fn multiply(&self, f: &NormalElement, g: &NormalElement) -> NormalElement {
        let mut out = self.zero();
        if g.is_zero() {
            return out;
        }
        for (alpha, r) in f.by_gens() {
            let h = self.left_mul_gens(alpha, g);
            out.add_assign(&h.base_mul(r));
        }
        out
    }

    pub fn pow(&self, f: &NormalElement, e: u32) -> NormalElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.multiply(&acc, f);
        }
        acc
    }

    /// Normal form of the word `l_1 l_2 … l_k`.
    pub fn word(&self, w: &[Letter]) -> NormalElement {
        let mut h = self.one();
        for &l in w.iter().rev() {
            h = self.left_mul_letter(l, &h);
        }
        h
    }

    /// Normal form of `x_i · t^e`.
    pub fn mul_gen_base(&self, i: usize, e: BaseExp) -> NormalElement {
        let t = self.from_base(BasePoly::monomial(self.m(), e, Rational::one()));
        self.left_mul_gen(i, &t)
    }

    /// Normal form of `x_j · x_i` for `j > i`.
    pub fn mul_gen_gen(&self, j: usize, i: usize) -> NormalElement {
        assert!(j > i, "mul_gen_gen expects j > i");
        self.left_mul_gen(j, &self.gen(i))
    }

    /// `(a t + b)^e x_i + p(t) Σ_{l<e} (a t + b)^l t^{e−1−l}`, without rewriting.
    pub fn commrel_closed_form(&self, i: usize, e: u32) -> Result<NormalElement, AlgebraError> {
        if self.m() != 1 {
            return Err(AlgebraError::Unsupported(
                "the closed form is available over k[t] only",
            ));
        }
        let s = self.sigma[i].image_of_var(0);
        let t = BasePoly::var(1, 0);
        let mut out = self.gen(i).base_mul(&s.pow(e));
        let mut sum = BasePoly::zero(1);
        for l in 0..e {
            sum = &sum + &(&s.pow(l) * &t.pow(e - 1 - l));
        }
        out.add_assign(&self.from_base(&sum * self.pres.p(i)));
        Ok(out)
    }

    /// All nonzero `NF(u)·NF(v) − NF(uv)` over words of length ≤ `max_len`.
    pub fn check_pbw_diamond(&self, max_len: usize) -> Vec<DiamondResidual> {
        let letters = self.letters();
        let mut nf: HashMap<Vec<Letter>, NormalElement> = HashMap::new();
        nf.insert(Vec::new(), self.one());
        let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
        let mut out = Vec::new();
        for len in 1..=max_len {
            let mut next = Vec::new();
            for w in &layer {
                for &l in &letters {
                    let mut word = Vec::with_capacity(len);
                    word.push(l);
                    word.extend_from_slice(w);
                    let value = self.left_mul_letter(l, &nf[w]);
                    nf.insert(word.clone(), value);
                    next.push(word);
                }
            }
            for word in &next {
                let whole = &nf[word];
                for split in 1..len {
                    let prod = self.multiply(&nf[&word[..split]], &nf[&word[split..]]);
                    let diff = prod.sub(whole);
                    if !diff.is_zero() {
                        out.push(DiamondResidual {
                            word: word.clone(),
                            split,
                            residual: diff,
                        });
                    }
                }
            }
            layer = next;
        }
        out
    }
}
