//! Presentation data of a skew PBW extension and its shape validation.
//!
//! Generators are indexed from 0 in the API (`x_{i+1}` is generator `i`),
//! base variables likewise (`t_{j+1}` is base variable `j`).

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::base_ring::{AffineMap, BasePoly};
use crate::rational::Rational;

pub mod tables;

pub use tables::{classify_case, CaseLabel, CaseTable};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtensionPresentation {
    m: usize,
    n: usize,
    /// `scale[i][j]` is `a_{i,j}` of `x_i t_j = (a t_j + b) x_i + p_i`.
    scale: Vec<Vec<Rational>>,
    shift: Vec<Vec<Rational>>,
    p: Vec<BasePoly>,
    /// `c[i][j]` for `i < j`; other entries are unused.
    c: Vec<Vec<Rational>>,
    /// `q[i][j][k]` for `i < j`: index 0 is the constant, `k + 1` the coefficient of `x_k`.
    q: Vec<Vec<Vec<Rational>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeViolation {
    pub field: String,
    pub message: String,
}

impl fmt::Display for ShapeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

impl ExtensionPresentation {
    /// The commutative presentation: `σ_i = id`, `p = 0`, `c = 1`, `q = 0`.
    pub fn commutative(m: usize, n: usize) -> Self {
        assert!(m == 1 || m == 2, "base arity must be 1 or 2");
        ExtensionPresentation {
            m,
            n,
            scale: vec![vec![Rational::one(); m]; n],
            shift: vec![vec![Rational::zero(); m]; n],
            p: vec![BasePoly::zero(m); n],
            c: vec![vec![Rational::one(); n]; n],
            q: vec![vec![vec![Rational::zero(); n + 1]; n]; n],
        }
    }

    pub fn base_arity(&self) -> usize {
        self.m
    }

    pub fn num_generators(&self) -> usize {
        self.n
    }

    /// Number of differentials, `m + n`.
    pub fn dimension(&self) -> usize {
        self.m + self.n
    }

    pub fn set_sigma(&mut self, i: usize, j: usize, a: Rational, b: Rational) -> &mut Self {
        self.scale[i][j] = a;
        self.shift[i][j] = b;
        self
    }

    pub fn set_p(&mut self, i: usize, p: BasePoly) -> &mut Self {
        assert_eq!(p.arity(), self.m, "p arity must equal the base arity");
        self.p[i] = p;
        self
    }

    pub fn set_c(&mut self, i: usize, j: usize, c: Rational) -> &mut Self {
        assert!(i < j, "c is stored for i < j");
        self.c[i][j] = c;
        self
    }

    /// Sets the constant term `q_{i,j}^{(0)}`.
    pub fn set_q0(&mut self, i: usize, j: usize, v: Rational) -> &mut Self {
        assert!(i < j, "q is stored for i < j");
        self.q[i][j][0] = v;
        self
    }

    /// Sets the coefficient of `x_k` in the `x_j x_i` relation.
    pub fn set_q(&mut self, i: usize, j: usize, k: usize, v: Rational) -> &mut Self {
        assert!(i < j, "q is stored for i < j");
        self.q[i][j][k + 1] = v;
        self
    }

    pub fn a(&self, i: usize, j: usize) -> &Rational {
        &self.scale[i][j]
    }

    pub fn b(&self, i: usize, j: usize) -> &Rational {
        &self.shift[i][j]
    }

    pub fn p(&self, i: usize) -> &BasePoly {
        &self.p[i]
    }

    /// `σ_i` as an affine map. Requires nonzero scales.
    pub fn sigma(&self, i: usize) -> AffineMap {
        AffineMap::new(self.scale[i].clone(), self.shift[i].clone())
            .expect("sigma scales are validated nonzero")
    }

    /// Stored `c_{i,j}` for `i < j`.
    pub fn c_upper(&self, i: usize, j: usize) -> &Rational {
        assert!(i < j);
        &self.c[i][j]
    }

    /// Stored `q_{i,j}^{(0)}` for `i < j`.
    pub fn q0_upper(&self, i: usize, j: usize) -> &Rational {
        assert!(i < j);
        &self.q[i][j][0]
    }

    /// Stored coefficient of `x_k` in the `x_j x_i` relation, `i < j`.
    pub fn q_upper(&self, i: usize, j: usize, k: usize) -> &Rational {
        assert!(i < j);
        &self.q[i][j][k + 1]
    }

    /// `c_{i,j}` with `c_{j,i} = c_{i,j}^{-1}` and `c_{i,i} = 1`.
    pub fn c(&self, i: usize, j: usize) -> Rational {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.c[i][j].clone(),
            Equal => Rational::one(),
            Greater => self.c[j][i].recip(),
        }
    }

    /// Full `q` vector (constant first) with `q_{j,i} = −c_{i,j}^{-1} q_{i,j}` and `q_{i,i} = 0`.
    pub fn q_vec(&self, i: usize, j: usize) -> Vec<Rational> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.q[i][j].clone(),
            Equal => vec![Rational::zero(); self.n + 1],
            Greater => {
                let ci = self.c[j][i].recip();
                self.q[j][i].iter().map(|v| -(v * &ci)).collect()
            }
        }
    }

    /// `q_{i,j}^{(k)}` under the convention; `k = None` is the constant term.
    pub fn q(&self, i: usize, j: usize, k: Option<usize>) -> Rational {
        let idx = k.map_or(0, |k| k + 1);
        self.q_vec(i, j)[idx].clone()
    }

    /// All shape violations; empty iff the presentation is well formed.
    pub fn validate_shape(&self) -> Vec<ShapeViolation> {
        let mut out = Vec::new();
        let mut push = |field: String, message: &str| {
            out.push(ShapeViolation {
                field,
                message: message.to_string(),
            })
        };
        if !(self.m == 1 || self.m == 2) {
            push("base_arity".into(), "must be 1 or 2");
        }
        if self.n == 0 {
            push("generators".into(), "must be at least 1");
        }
        for i in 0..self.n {
            for j in 0..self.m {
                if self.scale[i][j].is_zero() {
                    push(
                        format!("sigma[{}][{}].scale", i + 1, j + 1),
                        "sigma scale must be nonzero",
                    );
                }
            }
            if self.p[i].arity() != self.m {
                push(format!("delta_p[{}]", i + 1), "arity must equal base_arity");
            } else if self.m == 2 && !self.p[i].is_constant() {
                push(
                    format!("delta_p[{}]", i + 1),
                    "p must be constant when base_arity is 2",
                );
            }
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.c[i][j].is_zero() {
                    push(format!("c[{}][{}]", i + 1, j + 1), "c must be nonzero");
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate_shape().is_empty()
    }
}

/// Builds a presentation from raw parts, checking only dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct PresentationParts {
    pub m: usize,
    pub n: usize,
    pub scale: Vec<Vec<Rational>>,
    pub shift: Vec<Vec<Rational>>,
    pub p: Vec<BasePoly>,
    /// Upper-triangular rows: `c[i]` lists `c_{i,j}` for `j = i+1..n`.
    pub c: Vec<Vec<Rational>>,
    /// Upper-triangular rows of `n+1` vectors, constant first.
    pub q: Vec<Vec<Vec<Rational>>>,
}

impl PresentationParts {
    pub fn build(self) -> Result<ExtensionPresentation, String> {
        let PresentationParts { m, n, scale, shift, p, c, q } = self;
        if !(m == 1 || m == 2) {
            return Err(format!("base_arity must be 1 or 2, found {}", m));
        }
        if n == 0 {
            return Err("generators must be at least 1".into());
        }
        let check = |what: &str, len: usize, want: usize| {
            if len != want {
                Err(format!("{}: expected {} entries, found {}", what, want, len))
            } else {
                Ok(())
            }
        };
        check("sigma", scale.len(), n)?;
        check("sigma", shift.len(), n)?;
        check("delta_p", p.len(), n)?;
        for i in 0..n {
            check(&format!("sigma[{}]", i + 1), scale[i].len(), m)?;
            check(&format!("sigma[{}]", i + 1), shift[i].len(), m)?;
        }
        check("c", c.len(), n.saturating_sub(1))?;
        check("q", q.len(), n.saturating_sub(1))?;
        let mut pres = ExtensionPresentation::commutative(m, n);
        pres.scale = scale;
        pres.shift = shift;
        pres.p = p;
        for i in 0..n.saturating_sub(1) {
            check(&format!("c[{}]", i + 1), c[i].len(), n - i - 1)?;
            check(&format!("q[{}]", i + 1), q[i].len(), n - i - 1)?;
            for (off, j) in (i + 1..n).enumerate() {
                pres.c[i][j] = c[i][off].clone();
                check(&format!("q[{}][{}]", i + 1, j + 1), q[i][off].len(), n + 1)?;
                pres.q[i][j] = q[i][off].clone();
            }
        }
        Ok(pres)
    }
}

impl ExtensionPresentation {
    /// Inverse of [`PresentationParts::build`].
    pub fn to_parts(&self) -> PresentationParts {
        let n = self.n;
        PresentationParts {
            m: self.m,
            n,
            scale: self.scale.clone(),
            shift: self.shift.clone(),
            p: self.p.clone(),
            c: (0..n.saturating_sub(1))
                .map(|i| (i + 1..n).map(|j| self.c[i][j].clone()).collect())
                .collect(),
            q: (0..n.saturating_sub(1))
                .map(|i| (i + 1..n).map(|j| self.q[i][j].clone()).collect())
                .collect(),
        }
    }
}
