//! Case tables for k[t] and the condition system for k[t1,t2].
//!
//! Every row is a list of cell predicates; each predicate contributes a
//! residual that vanishes exactly when the cell holds.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::ExtensionPresentation;
use crate::base_ring::BasePoly;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseTable {
    Table1,
    Table2,
    Table3,
    TwoVarConditions,
}

impl fmt::Display for CaseTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTable::Table1 => "Table1",
            CaseTable::Table2 => "Table2",
            CaseTable::Table3 => "Table3",
            CaseTable::TwoVarConditions => "TwoVarConditions",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub condition: String,
    pub value: BasePoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseLabel {
    pub table: CaseTable,
    pub case_id: String,
    pub row: Option<usize>,
    pub matched: bool,
    /// Nonzero residuals only; empty iff `matched`.
    pub residuals: Vec<Residual>,
}

impl CaseLabel {
    /// `Table1/(e)/row2`, `Table1/(i)`, `TwoVarConditions`.
    pub fn id(&self) -> String {
        let mut s = self.table.to_string();
        if !self.case_id.is_empty() {
            s.push('/');
            s.push_str(&self.case_id);
        }
        if let Some(r) = self.row {
            s.push_str(&format!("/row{}", r));
        }
        s
    }
}

struct Cells<'a> {
    pres: &'a ExtensionPresentation,
    residuals: Vec<Residual>,
}

impl<'a> Cells<'a> {
    fn new(pres: &'a ExtensionPresentation) -> Self {
        Cells {
            pres,
            residuals: Vec::new(),
        }
    }

    fn poly(&mut self, name: String, value: BasePoly) {
        if !value.is_zero() {
            self.residuals.push(Residual {
                condition: name,
                value,
            });
        }
    }

    fn scalar(&mut self, name: String, value: Rational) {
        let m = self.pres.base_arity();
        self.poly(name, BasePoly::constant(m, value));
    }

    fn eq(&mut self, name: String, lhs: Rational, rhs: Rational) {
        self.scalar(name, lhs - rhs);
    }

    fn holds(&mut self, name: String, ok: bool) {
        self.scalar(name, if ok { Rational::zero() } else { Rational::one() });
    }

    fn a(&self, i: usize) -> Rational {
        self.pres.a(i, 0).clone()
    }

    fn b(&self, i: usize) -> Rational {
        self.pres.b(i, 0).clone()
    }

    fn a_is_one(&mut self, i: usize) {
        let a = self.a(i);
        self.eq(format!("a{} = 1", i + 1), a, Rational::one());
    }

    fn a_not_one(&mut self, i: usize) {
        let ok = !self.a(i).is_one();
        self.holds(format!("a{} != 1", i + 1), ok);
    }

    fn b_is_zero(&mut self, i: usize) {
        let b = self.b(i);
        self.scalar(format!("b{} = 0", i + 1), b);
    }

    fn b_not_zero(&mut self, i: usize) {
        let ok = !self.b(i).is_zero();
        self.holds(format!("b{} != 0", i + 1), ok);
    }

    fn p_zero(&mut self, i: usize) {
        let p = self.pres.p(i).clone();
        self.poly(format!("p{} = 0", i + 1), p);
    }

    fn p_const(&mut self, i: usize) {
        let d = self.pres.p(i).derivative();
        self.poly(format!("p{} constant", i + 1), d);
    }

    /// `p_i(t) = λ(t + b_i/(a_i − 1))`, residual `(a−1)p − p′((a−1)t + b)`.
    fn p_shifted_linear(&mut self, i: usize) {
        let am1 = self.a(i) - Rational::one();
        let p = self.pres.p(i);
        let lin = &BasePoly::from_coeffs(&[self.b(i), am1.clone()]) * &p.derivative();
        let r = &p.scale(&am1) - &lin;
        self.poly(format!("p{}(t) = p{}*(t + b{}/(a{}-1))", i + 1, i + 1, i + 1, i + 1), r);
    }

    /// `p_i(t) = λ t`, residual `p − t p′`.
    fn p_times_t(&mut self, i: usize) {
        let p = self.pres.p(i);
        let r = p - &(&BasePoly::var(1, 0) * &p.derivative());
        self.poly(format!("p{}(t) = p{}*t", i + 1, i + 1), r);
    }

    fn c_is(&mut self, i: usize, j: usize, v: Rational, what: &str) {
        let c = self.pres.c_upper(i, j).clone();
        self.eq(format!("c{}{} = {}", i + 1, j + 1, what), c, v);
    }

    fn c_not_in(&mut self, i: usize, j: usize, set: &[Rational], what: &str) {
        let c = self.pres.c_upper(i, j);
        let ok = !set.contains(c);
        self.holds(format!("c{}{} not in {}", i + 1, j + 1, what), ok);
    }

    fn q0_zero(&mut self, i: usize, j: usize) {
        let v = self.pres.q0_upper(i, j).clone();
        self.scalar(format!("q{}{}^(0) = 0", i + 1, j + 1), v);
    }

    fn qk_zero(&mut self, i: usize, j: usize) {
        for k in 0..self.pres.num_generators() {
            let v = self.pres.q_upper(i, j, k).clone();
            self.scalar(format!("q{}{}^({}) = 0", i + 1, j + 1, k + 1), v);
        }
    }

    fn q_all_zero(&mut self, i: usize, j: usize) {
        self.q0_zero(i, j);
        self.qk_zero(i, j);
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.pres.num_generators();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
    }

    fn finish(self, table: CaseTable, case_id: &str, row: Option<usize>) -> CaseLabel {
        CaseLabel {
            table,
            case_id: case_id.to_string(),
            row,
            matched: self.residuals.is_empty(),
            residuals: self.residuals,
        }
    }
}

type Cell = fn(&mut Cells);

struct RowSpec {
    case_id: &'static str,
    row: Option<usize>,
    shape: Cell,
    cells: Cell,
}

fn table1_rows() -> Vec<RowSpec> {
    fn shape_a(e: &mut Cells) {
        e.a_is_one(0);
        e.b_is_zero(0);
        e.a_is_one(1);
        e.b_is_zero(1);
    }
    fn shape_b(e: &mut Cells) {
        e.a_is_one(0);
        e.b_is_zero(0);
        e.a_is_one(1);
        e.b_not_zero(1);
    }
    fn shape_c(e: &mut Cells) {
        e.a_is_one(0);
        e.b_not_zero(0);
        e.a_is_one(1);
        e.b_is_zero(1);
    }
    fn shape_d(e: &mut Cells) {
        e.a_is_one(0);
        e.b_not_zero(0);
        e.a_is_one(1);
        e.b_not_zero(1);
    }
    fn shape_e(e: &mut Cells) {
        e.a_is_one(0);
        e.b_is_zero(0);
        e.a_not_one(1);
    }
    fn shape_f(e: &mut Cells) {
        e.a_is_one(0);
        e.b_not_zero(0);
        e.a_not_one(1);
    }
    fn shape_g(e: &mut Cells) {
        e.a_not_one(0);
        e.a_is_one(1);
        e.b_is_zero(1);
    }
    fn shape_h(e: &mut Cells) {
        e.a_not_one(0);
        e.a_is_one(1);
        e.b_not_zero(1);
    }
    fn shape_i(e: &mut Cells) {
        e.a_not_one(0);
        e.a_not_one(1);
        e.b_is_zero(0);
        e.b_is_zero(1);
    }
    fn zero_p_zero_q(e: &mut Cells) {
        e.p_zero(0);
        e.p_zero(1);
        e.q_all_zero(0, 1);
    }
    fn row_a2(e: &mut Cells) {
        e.qk_zero(0, 1);
        e.c_is(0, 1, Rational::one(), "1");
    }
    fn const_p_row(e: &mut Cells) {
        e.p_const(0);
        e.p_const(1);
        e.c_is(0, 1, Rational::one(), "1");
        e.qk_zero(0, 1);
    }
    fn row_e1(e: &mut Cells) {
        e.p_zero(0);
        e.p_shifted_linear(1);
        e.c_is(0, 1, Rational::one(), "1");
        e.q_all_zero(0, 1);
    }
    fn row_e2(e: &mut Cells) {
        e.p_const(0);
        e.p_zero(1);
        e.q_all_zero(0, 1);
        let inv = e.a(1).recip();
        e.c_is(0, 1, inv, "a2^-1");
    }
    fn row_e3(e: &mut Cells) {
        zero_p_zero_q(e);
        let set = [Rational::one(), e.a(1).recip()];
        e.c_not_in(0, 1, &set, "{1, a2^-1}");
    }
    fn row_f(e: &mut Cells) {
        e.p_const(0);
        e.p_shifted_linear(1);
        let v = e.pres.c_upper(0, 1) * e.b(0) * (e.a(1) - Rational::one());
        e.scalar("c12*b1*(a2-1) = 0".into(), v);
    }
    fn row_g1(e: &mut Cells) {
        e.p_shifted_linear(0);
        e.p_zero(1);
        e.c_is(0, 1, Rational::one(), "1");
        e.q_all_zero(0, 1);
    }
    fn row_g2(e: &mut Cells) {
        e.p_zero(0);
        e.p_const(1);
        e.q_all_zero(0, 1);
        let inv = e.a(0).recip();
        e.c_is(0, 1, inv, "a1^-1");
    }
    fn row_g3(e: &mut Cells) {
        zero_p_zero_q(e);
        let set = [Rational::one(), e.a(0).recip()];
        e.c_not_in(0, 1, &set, "{1, a1^-1}");
    }
    fn row_h(e: &mut Cells) {
        e.p_shifted_linear(0);
        e.p_const(1);
        let v = e.pres.c_upper(0, 1).recip() * e.b(1) * (e.a(0) - Rational::one());
        e.scalar("c12^-1*b2*(a1-1) = 0".into(), v);
    }
    fn row_i(e: &mut Cells) {
        e.p_times_t(0);
        e.p_times_t(1);
        e.c_is(0, 1, Rational::one(), "1");
        e.q_all_zero(0, 1);
    }
    let r = |case_id, row, shape: Cell, cells: Cell| RowSpec {
        case_id,
        row,
        shape,
        cells,
    };
    vec![
        r("(a)", Some(1), shape_a, zero_p_zero_q),
        r("(a)", Some(2), shape_a, row_a2),
        r("(b)", Some(1), shape_b, const_p_row),
        r("(b)", Some(2), shape_b, zero_p_zero_q),
        r("(c)", Some(1), shape_c, const_p_row),
        r("(c)", Some(2), shape_c, zero_p_zero_q),
        r("(d)", Some(1), shape_d, const_p_row),
        r("(d)", Some(2), shape_d, zero_p_zero_q),
        r("(e)", Some(1), shape_e, row_e1),
        r("(e)", Some(2), shape_e, row_e2),
        r("(e)", Some(3), shape_e, row_e3),
        r("(f)", None, shape_f, row_f),
        r("(g)", Some(1), shape_g, row_g1),
        r("(g)", Some(2), shape_g, row_g2),
        r("(g)", Some(3), shape_g, row_g3),
        r("(h)", None, shape_h, row_h),
        r("(i)", None, shape_i, row_i),
    ]
}

fn general_rows() -> Vec<RowSpec> {
    fn all<'p>(e: &mut Cells<'p>, f: impl Fn(&mut Cells<'p>, usize)) {
        for i in 0..e.pres.num_generators() {
            f(e, i);
        }
    }
    fn all_pairs<'p>(e: &mut Cells<'p>, f: impl Fn(&mut Cells<'p>, usize, usize)) {
        for (i, j) in e.pairs() {
            f(e, i, j);
        }
    }
    fn c_one(e: &mut Cells, i: usize, j: usize) {
        e.c_is(i, j, Rational::one(), "1");
    }
    fn shape_a(e: &mut Cells) {
        all(e, Cells::a_is_one);
        all(e, Cells::b_is_zero);
    }
    fn shape_b(e: &mut Cells) {
        all(e, Cells::a_is_one);
        let n = e.pres.num_generators();
        let ok = (0..n).any(|l| !e.b(l).is_zero());
        e.holds("b_l != 0 for some l".into(), ok);
    }
    fn shape_c(e: &mut Cells) {
        let n = e.pres.num_generators();
        let s: Vec<usize> = (0..n).filter(|&r| !e.a(r).is_one()).collect();
        e.holds(
            "S = {r : a_r != 1} is a nonempty proper subset".into(),
            !s.is_empty() && s.len() < n,
        );
        for i in (0..n).filter(|i| !s.contains(i)) {
            e.b_is_zero(i);
        }
    }
    fn shape_d(e: &mut Cells) {
        all(e, Cells::a_not_one);
        all(e, Cells::b_is_zero);
    }
    fn zero_p_zero_q(e: &mut Cells) {
        all(e, Cells::p_zero);
        all_pairs(e, Cells::q_all_zero);
    }
    fn row_a2(e: &mut Cells) {
        all_pairs(e, Cells::qk_zero);
        all_pairs(e, c_one);
    }
    fn row_b1(e: &mut Cells) {
        all(e, Cells::p_const);
        all_pairs(e, c_one);
        all_pairs(e, Cells::qk_zero);
    }
    fn row_c(e: &mut Cells) {
        let n = e.pres.num_generators();
        for i in 0..n {
            if e.a(i).is_one() {
                e.p_zero(i);
            } else {
                e.p_shifted_linear(i);
            }
        }
        all_pairs(e, Cells::q_all_zero);
        all_pairs(e, c_one);
    }
    fn row_d(e: &mut Cells) {
        all(e, Cells::p_times_t);
        all_pairs(e, Cells::q_all_zero);
        all_pairs(e, c_one);
    }
    let r = |case_id, row, shape: Cell, cells: Cell| RowSpec {
        case_id,
        row,
        shape,
        cells,
    };
    vec![
        r("(a)", Some(1), shape_a, zero_p_zero_q),
        r("(a)", Some(2), shape_a, row_a2),
        r("(b)", Some(1), shape_b, row_b1),
        r("(b)", Some(2), shape_b, zero_p_zero_q),
        r("(c)", None, shape_c, row_c),
        r("(d)", None, shape_d, row_d),
    ]
}

fn eval_rows(pres: &ExtensionPresentation, table: CaseTable, rows: Vec<RowSpec>) -> Vec<CaseLabel> {
    let mut matched = Vec::new();
    let mut near = Vec::new();
    for spec in rows {
        let mut shape = Cells::new(pres);
        (spec.shape)(&mut shape);
        let shape_ok = shape.residuals.is_empty();
        let mut cells = shape;
        (spec.cells)(&mut cells);
        let label = cells.finish(table, spec.case_id, spec.row);
        if label.matched {
            matched.push(label);
        } else if shape_ok {
            near.push(label);
        }
    }
    if matched.is_empty() {
        near
    } else {
        matched
    }
}

/// Conditions for a base `k[t1,t2]`, with the index conventions
/// `c_{r,t} = c_{t,r}^{-1}`, `q_{r,t} = −c_{t,r}^{-1} q_{t,r}` for `t < r`.
fn two_var_conditions(pres: &ExtensionPresentation) -> CaseLabel {
    let n = pres.num_generators();
    let mut e = Cells::new(pres);
    let one = Rational::one();
    let c = |i: usize, j: usize| pres.c(i, j);
    let q = |i: usize, j: usize, k: usize| pres.q(i, j, Some(k));
    let q0 = |i: usize, j: usize| pres.q(i, j, None);
    let a = |i: usize, l: usize| pres.a(i, l).clone();
    let b = |i: usize, l: usize| pres.b(i, l).clone();
    let p = |i: usize| pres.p(i).constant_term();
    for s in 0..n {
        for i in 0..n {
            for l in 0..2 {
                let (s1, i1, l1) = (s + 1, i + 1, l + 1);
                e.eq(
                    format!("b{s1}{l1}*(a{i1}{l1}{l1}-1) = b{i1}{l1}*(a{s1}{l1}{l1}-1)"),
                    b(s, l) * (a(i, l) - &one),
                    b(i, l) * (a(s, l) - &one),
                );
                e.scalar(
                    format!("q{s1}{i1}^({s1})*(a{i1}{l1}{l1}-1) = 0"),
                    q(s, i, s) * (a(i, l) - &one),
                );
                e.eq(
                    format!("p{i1}*(c{s1}{i1}-a{s1}{l1}{l1}) = b{i1}{l1}*q{s1}{i1}^({s1})"),
                    p(i) * (c(s, i) - a(s, l)),
                    b(i, l) * q(s, i, s),
                );
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for s in 0..n {
                let (i1, j1, s1) = (i + 1, j + 1, s + 1);
                let csjsi = c(s, j) * c(s, i);
                e.scalar(
                    format!("q{i1}{j1}^({s1})*(c{s1}{j1}*c{s1}{i1}-1) = 0"),
                    q(i, j, s) * (&csjsi - &one),
                );
                e.eq(
                    format!("q{s1}{j1}^({s1})*(c{i1}{j1}-1) = q{i1}{j1}^({i1})*(c{s1}{j1}-1)"),
                    q(s, j, s) * (c(i, j) - &one),
                    q(i, j, i) * (c(s, j) - &one),
                );
                e.eq(
                    format!("q{s1}{i1}^({s1})*(c{i1}{j1}-1) = q{i1}{j1}^({j1})*(c{s1}{i1}-1)"),
                    q(s, i, s) * (c(i, j) - &one),
                    q(i, j, j) * (c(s, i) - &one),
                );
                for k in 0..n {
                    let k1 = k + 1;
                    e.scalar(
                        format!("q{i1}{j1}^({k1})*(c{s1}{j1}*c{s1}{i1}-c{k1}{s1}^-1) = 0"),
                        q(i, j, k) * (&csjsi - c(k, s).recip()),
                    );
                }
                let mut sum = Rational::zero();
                for k in 0..n {
                    if k < s {
                        sum += c(k, s).recip() * q(i, j, k) * q(k, s, s);
                    } else if k > s {
                        sum -= q(i, j, k) * q(k, s, s);
                    }
                }
                sum += q(s, i, s) * q(s, j, s) * (&one - c(i, j));
                sum += (&csjsi - &one) * q0(i, j);
                e.scalar(format!("quadratic q-condition (i={i1}, j={j1}, s={s1})"), sum);
            }
        }
    }
    e.finish(CaseTable::TwoVarConditions, "", None)
}

/// All matching rows; when nothing matches, the rows whose parameter
/// shape fits, each with its nonzero residuals.
pub fn classify_case(pres: &ExtensionPresentation) -> Vec<CaseLabel> {
    let n = pres.num_generators();
    match (pres.base_arity(), n) {
        (2, _) => vec![two_var_conditions(pres)],
        (_, 2) => eval_rows(pres, CaseTable::Table1, table1_rows()),
        (_, 3) => eval_rows(pres, CaseTable::Table2, general_rows()),
        _ => eval_rows(pres, CaseTable::Table3, general_rows()),
    }
}
