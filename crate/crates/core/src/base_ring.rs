//! Commutative polynomials in one or two central variables over the rationals,
//! affine substitutions, and the divided-difference σ-derivation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::rational::{format_rational, Rational};

/// Exponent vector; the second slot is always zero when the arity is 1.
pub type BaseExp = [u32; 2];

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BasePoly {
    arity: usize,
    terms: BTreeMap<BaseExp, Rational>,
}

impl BasePoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity == 1 || arity == 2, "base arity must be 1 or 2");
        BasePoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::monomial(arity, [0, 0], c)
    }

    pub fn monomial(arity: usize, exp: BaseExp, c: Rational) -> Self {
        let mut p = Self::zero(arity);
        assert!(arity == 2 || exp[1] == 0, "exponent outside arity");
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The variable `t_{j+1}` (0-based `j`).
    pub fn var(arity: usize, j: usize) -> Self {
        let mut exp = [0, 0];
        exp[j] = 1;
        Self::monomial(arity, exp, Rational::one())
    }

    /// Univariate polynomial from coefficients, constant term first.
    pub fn from_coeffs(coeffs: &[Rational]) -> Self {
        let mut p = Self::zero(1);
        for (e, c) in coeffs.iter().enumerate() {
            p.add_term([e as u32, 0], c.clone());
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BaseExp, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: BaseExp) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff([0, 0])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[0] + e[1]).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0, 0])
    }

    /// Univariate coefficients, constant term first.
    pub fn coeffs(&self) -> Vec<Rational> {
        assert_eq!(self.arity, 1);
        let deg = match self.degree() {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        (0..=deg).map(|e| self.coeff([e as u32, 0])).collect()
    }

    pub fn add_term(&mut self, exp: BaseExp, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        BasePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.arity);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `t_{j+1}`.
    pub fn partial(&self, j: usize) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            if e[j] > 0 {
                let mut ne = *e;
                ne[j] -= 1;
                out.add_term(ne, c * Rational::from_integer(e[j].into()));
            }
        }
        out
    }

    /// Formal derivative of a univariate polynomial.
    pub fn derivative(&self) -> Self {
        assert_eq!(self.arity, 1, "derivative is defined for univariate polynomials");
        self.partial(0)
    }

    /// Exact univariate division. Panics when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &BasePoly) -> BasePoly {
        assert_eq!(self.arity, 1);
        assert_eq!(divisor.arity, 1);
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeff([dd, 0]);
        let mut rem = self.clone();
        let mut quot = BasePoly::zero(1);
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.coeff([rd, 0]) / &lead;
            let shift = rd - dd;
            quot.add_term([shift, 0], c.clone());
            for (e, v) in &divisor.terms {
                rem.add_term([e[0] + shift, 0], -(v * &c));
            }
        }
        assert!(
            rem.is_zero(),
            "internal error: inexact polynomial division ({} by {})",
            self,
            divisor
        );
        quot
    }
}

impl Add for &BasePoly {
    type Output = BasePoly;
    fn add(self, rhs: &BasePoly) -> BasePoly {
        assert_eq!(self.arity, rhs.arity);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &BasePoly {
    type Output = BasePoly;
    fn sub(self, rhs: &BasePoly) -> BasePoly {
        assert_eq!(self.arity, rhs.arity);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &BasePoly {
    type Output = BasePoly;
    fn neg(self) -> BasePoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &BasePoly {
    type Output = BasePoly;
    fn mul(self, rhs: &BasePoly) -> BasePoly {
        assert_eq!(self.arity, rhs.arity);
        let mut out = BasePoly::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1]], c1 * c2);
            }
        }
        out
    }
}

pub(crate) fn base_var_name(arity: usize, j: usize) -> String {
    if arity == 1 {
        "t".to_string()
    } else {
        format!("t{}", j + 1)
    }
}

pub(crate) fn write_base_monomial(arity: usize, exp: &BaseExp, out: &mut Vec<String>) {
    for (j, &k) in exp.iter().enumerate().take(arity) {
        match k {
            0 => {}
            1 => out.push(base_var_name(arity, j)),
            _ => out.push(format!("{}^{}", base_var_name(arity, j), k)),
        }
    }
}

impl fmt::Display for BasePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            write_base_monomial(self.arity, e, &mut factors);
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            let body = if factors.is_empty() {
                format_rational(&abs)
            } else if abs.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", format_rational(&abs), factors.join("*"))
            };
            match (first, neg) {
                (true, true) => write!(f, "-{}", body)?,
                (true, false) => write!(f, "{}", body)?,
                (false, true) => write!(f, " - {}", body)?,
                (false, false) => write!(f, " + {}", body)?,
            }
            first = false;
        }
        Ok(())
    }
}

impl serde::Serialize for BasePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Diagonal affine substitution `t_j ↦ a_j t_j + b_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineMap {
    scale: Vec<Rational>,
    shift: Vec<Rational>,
}

impl AffineMap {
    pub fn new(scale: Vec<Rational>, shift: Vec<Rational>) -> Result<Self, AlgebraError> {
        if scale.len() != shift.len() {
            return Err(AlgebraError::ArityMismatch {
                expected: scale.len(),
                found: shift.len(),
            });
        }
        if !(scale.len() == 1 || scale.len() == 2) {
            return Err(AlgebraError::Unsupported("affine maps have arity 1 or 2"));
        }
        if scale.iter().any(Zero::is_zero) {
            return Err(AlgebraError::InvalidPresentation(
                "affine scale must be nonzero".into(),
            ));
        }
        Ok(AffineMap { scale, shift })
    }

    pub fn univariate(a: Rational, b: Rational) -> Result<Self, AlgebraError> {
        Self::new(vec![a], vec![b])
    }

    pub fn identity(arity: usize) -> Self {
        AffineMap {
            scale: vec![Rational::one(); arity],
            shift: vec![Rational::zero(); arity],
        }
    }

    pub fn arity(&self) -> usize {
        self.scale.len()
    }

    pub fn scale(&self, j: usize) -> &Rational {
        &self.scale[j]
    }

    pub fn shift(&self, j: usize) -> &Rational {
        &self.shift[j]
    }

    pub fn is_identity(&self) -> bool {
        self.scale.iter().all(One::is_one) && self.shift.iter().all(Zero::is_zero)
    }

    pub fn inverse(&self) -> Self {
        let scale: Vec<Rational> = self.scale.iter().map(|a| a.recip()).collect();
        let shift = self
            .shift
            .iter()
            .zip(&scale)
            .map(|(b, ai)| -(b * ai))
            .collect();
        AffineMap { scale, shift }
    }

    /// `(self ∘ other)(t) = self(other(t))`.
    pub fn compose(&self, other: &AffineMap) -> Self {
        assert_eq!(self.arity(), other.arity());
        let scale = self.scale.iter().zip(&other.scale).map(|(a, c)| a * c).collect();
        let shift = (0..self.arity())
            .map(|j| &self.scale[j] * &other.shift[j] + &self.shift[j])
            .collect();
        AffineMap { scale, shift }
    }

    /// The image `a_j t_j + b_j` of the variable `t_{j+1}`.
    pub fn image_of_var(&self, j: usize) -> BasePoly {
        let n = self.arity();
        &BasePoly::var(n, j).scale(&self.scale[j]) + &BasePoly::constant(n, self.shift[j].clone())
    }
}

/// Replaces each `t_j` in `f` by `a_j t_j + b_j`.
pub fn substitute(f: &BasePoly, s: &AffineMap) -> Result<BasePoly, AlgebraError> {
    if f.arity() != s.arity() {
        return Err(AlgebraError::ArityMismatch {
            expected: s.arity(),
            found: f.arity(),
        });
    }
    let arity = f.arity();
    let images: Vec<BasePoly> = (0..arity).map(|j| s.image_of_var(j)).collect();
    let mut powers: Vec<Vec<BasePoly>> = images.iter().map(|im| vec![BasePoly::one(arity), im.clone()]).collect();
    let mut out = BasePoly::zero(arity);
    for (e, c) in f.terms() {
        let mut term = BasePoly::constant(arity, c.clone());
        for j in 0..arity {
            let k = e[j] as usize;
            while powers[j].len() <= k {
                let next = powers[j].last().unwrap() * &images[j];
                powers[j].push(next);
            }
            term = &term * &powers[j][k];
        }
        out = &out + &term;
    }
    Ok(out)
}

pub fn derivative(f: &BasePoly) -> BasePoly {
    f.derivative()
}

/// `((f∘s − f)/(s(t) − t))·p`, or `f′·p` when `s` is the identity.
pub fn divided_difference(f: &BasePoly, s: &AffineMap, p: &BasePoly) -> BasePoly {
    assert_eq!(f.arity(), 1, "divided difference is univariate");
    assert_eq!(s.arity(), 1);
    assert_eq!(p.arity(), 1);
    if s.is_identity() {
        return &f.derivative() * p;
    }
    let fs = substitute(f, s).expect("arity checked");
    let num = &fs - f;
    let den = &s.image_of_var(0) - &BasePoly::var(1, 0);
    &num.div_exact(&den) * p
}

/// `Σ_{l<e} s(t_j)^l t_j^{e−1−l}`, the divided difference of `t_j^e` along `s`.
pub(crate) fn power_difference(arity: usize, s: &AffineMap, j: usize, e: u32) -> BasePoly {
    let img = s.image_of_var(j);
    let var = BasePoly::var(arity, j);
    let mut out = BasePoly::zero(arity);
    let mut img_pow = BasePoly::one(arity);
    for l in 0..e {
        out = &out + &(&img_pow * &var.pow(e - 1 - l));
        img_pow = &img_pow * &img;
    }
    out
}
