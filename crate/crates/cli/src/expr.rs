//! Expressions over `t`, `t1`, `t2`, `x1..`, rationals, `+ - * ^` and parentheses.

use spbw_core::normal_form::Letter;
use spbw_core::rational::parse_rational;
use spbw_core::{Algebra, NormalElement, Rational};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
pub enum Var {
    T,
    T1,
    T2,
    X(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Var { var: Var, column: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn err(column: usize, message: impl Into<String>) -> CliError {
    CliError::Expression {
        column,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, CliError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                if i >= chars.len() || !chars[i].is_ascii_digit() {
                    return Err(err(i + 1, "expected denominator after '/'"));
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else {
            return Err(err(col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let col = self.column();
            match self.bump() {
                Some((Tok::Num(s), _)) if !s.contains('/') => {
                    let e = s.parse::<u32>().map_err(|_| err(col, "exponent too large"))?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return Err(err(col, "expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        let col = self.column();
        match self.bump() {
            Some((Tok::Num(s), _)) => parse_rational(&s)
                .map(Expr::Num)
                .map_err(|e| err(col, e.to_string())),
            Some((Tok::Ident(name), _)) => {
                let var = match name.as_str() {
                    "t" => Var::T,
                    "t1" => Var::T1,
                    "t2" => Var::T2,
                    _ => match name.strip_prefix('x').map(str::parse::<usize>) {
                        Some(Ok(k)) => Var::X(k),
                        _ => return Err(err(col, format!("unknown symbol '{name}'"))),
                    },
                };
                Ok(Expr::Var { var, column: col })
            }
            Some((Tok::LParen, _)) => {
                let inner = self.expr()?;
                let close = self.column();
                match self.bump() {
                    Some((Tok::RParen, _)) => Ok(inner),
                    _ => Err(err(close, "expected ')'")),
                }
            }
            Some(_) => Err(err(col, "expected a number, variable or '('")),
            None => Err(err(col, "unexpected end of expression")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, CliError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.chars().count() + 1,
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err(p.column(), "unexpected trailing input"));
    }
    Ok(e)
}

fn letter(alg: &Algebra, var: &Var, column: usize) -> Result<Letter, CliError> {
    let unknown = |name: String| {
        CliError::Semantic(format!("unknown generator '{name}' at column {column}"))
    };
    match (var, alg.m()) {
        (Var::T, 1) => Ok(Letter::T(0)),
        (Var::T1, 2) => Ok(Letter::T(0)),
        (Var::T2, 2) => Ok(Letter::T(1)),
        (Var::X(k), _) if *k >= 1 && *k <= alg.n() => Ok(Letter::X(k - 1)),
        (Var::T, _) => Err(unknown("t".into())),
        (Var::T1, _) => Err(unknown("t1".into())),
        (Var::T2, _) => Err(unknown("t2".into())),
        (Var::X(k), _) => Err(unknown(format!("x{k}"))),
    }
}

/// Normal form of the expression, multiplying factors in order.
pub fn evaluate(alg: &Algebra, e: &Expr) -> Result<NormalElement, CliError> {
    Ok(match e {
        Expr::Num(r) => alg.scalar(r.clone()),
        Expr::Var { var, column } => alg.letter(letter(alg, var, *column)?),
        Expr::Neg(a) => evaluate(alg, a)?.neg(),
        Expr::Add(a, b) => evaluate(alg, a)?.add(&evaluate(alg, b)?),
        Expr::Sub(a, b) => evaluate(alg, a)?.sub(&evaluate(alg, b)?),
        Expr::Mul(a, b) => alg.multiply(&evaluate(alg, a)?, &evaluate(alg, b)?),
        Expr::Pow(a, k) => alg.pow(&evaluate(alg, a)?, *k),
    })
}

pub fn reduce(alg: &Algebra, src: &str) -> Result<NormalElement, CliError> {
    evaluate(alg, &parse(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use spbw_core::rational::rat;
    use spbw_core::{BasePoly, ExtensionPresentation};

    fn alg() -> Algebra {
        let mut p = ExtensionPresentation::commutative(1, 2);
        p.set_sigma(0, 0, rat(2), rat(3)).set_p(0, BasePoly::constant(1, rat(5)));
        Algebra::new(p).unwrap()
    }

    #[test]
    fn reduces_examples() {
        let a = alg();
        assert_eq!(reduce(&a, "x1*t").unwrap().to_string(), "2*t*x1 + 3*x1 + 5");
        assert_eq!(reduce(&a, "t*t").unwrap().to_string(), "t^2");
        assert_eq!(reduce(&a, "x1 t").unwrap(), reduce(&a, "x1*t").unwrap());
        assert_eq!(reduce(&a, "-(x2 - 1)^2 + 3/2").unwrap().to_string(), "-x2^2 + 2*x2 + 1/2");
    }

    #[test]
    fn errors_carry_columns() {
        let a = alg();
        match reduce(&a, "x1 * ").unwrap_err() {
            CliError::Expression { column, .. } => assert_eq!(column, 6),
            e => panic!("{e}"),
        }
        match reduce(&a, "x1 + $").unwrap_err() {
            CliError::Expression { column, .. } => assert_eq!(column, 6),
            e => panic!("{e}"),
        }
        assert_eq!(reduce(&a, "x3*t").unwrap_err().exit_code(), 1);
        assert_eq!(reduce(&a, "t1").unwrap_err().exit_code(), 1);
        assert_eq!(reduce(&a, "(x1").unwrap_err().exit_code(), 2);
    }
}
