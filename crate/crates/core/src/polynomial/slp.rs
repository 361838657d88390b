//! Single-intermediate-use straight-line programs as fully parenthesized
//! binary expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr     := rational | var | "(" expr ("+" | "*") expr ")"
//! var      := "x" <index in 1..=n>
//! rational := integer ["/" positive-integer]
//! ```
//!
//! Because every intermediate result is a subtree owned by exactly one
//! parent, the tree shape itself enforces single use.

use std::fmt;

use num_traits::{One, Zero};

use super::SparsePolynomial;
use crate::arith::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlpExpression {
    Constant(Rational),
    /// Zero-based variable index.
    Variable(usize),
    Sum(Box<SlpExpression>, Box<SlpExpression>),
    Product(Box<SlpExpression>, Box<SlpExpression>),
}

impl SlpExpression {
    pub fn sum(a: SlpExpression, b: SlpExpression) -> Self {
        SlpExpression::Sum(Box::new(a), Box::new(b))
    }

    pub fn product(a: SlpExpression, b: SlpExpression) -> Self {
        SlpExpression::Product(Box::new(a), Box::new(b))
    }

    /// 0 for constants, 1 for variables, max over sums, sum over products.
    pub fn formal_degree(&self) -> u32 {
        match self {
            SlpExpression::Constant(_) => 0,
            SlpExpression::Variable(_) => 1,
            SlpExpression::Sum(a, b) => a.formal_degree().max(b.formal_degree()),
            SlpExpression::Product(a, b) => a.formal_degree() + b.formal_degree(),
        }
    }

    /// Number of intermediate results (nodes).
    pub fn length(&self) -> usize {
        match self {
            SlpExpression::Constant(_) | SlpExpression::Variable(_) => 1,
            SlpExpression::Sum(a, b) | SlpExpression::Product(a, b) => 1 + a.length() + b.length(),
        }
    }

    /// Evaluate node by node at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        Ok(match self {
            SlpExpression::Constant(c) => c.clone(),
            SlpExpression::Variable(i) => point.get(*i).cloned().ok_or(Error::VariableOutOfRange {
                index: i + 1,
                count: point.len(),
            })?,
            SlpExpression::Sum(a, b) => a.evaluate(point)? + b.evaluate(point)?,
            SlpExpression::Product(a, b) => a.evaluate(point)? * b.evaluate(point)?,
        })
    }

    /// Execute the program on sparse polynomials in `variable_count`
    /// variables. Fails if the formal degree exceeds `degree_cap`.
    pub fn expand(&self, variable_count: usize, degree_cap: u32) -> Result<SparsePolynomial> {
        let degree = self.formal_degree();
        if degree > degree_cap {
            return Err(Error::FormalDegreeExceeded {
                degree,
                cap: degree_cap,
            });
        }
        self.expand_unchecked(variable_count)
    }

    fn expand_unchecked(&self, n: usize) -> Result<SparsePolynomial> {
        Ok(match self {
            SlpExpression::Constant(c) => SparsePolynomial::constant(n, c.clone()),
            SlpExpression::Variable(i) => {
                if *i >= n {
                    return Err(Error::VariableOutOfRange { index: i + 1, count: n });
                }
                SparsePolynomial::variable(n, *i)
            }
            SlpExpression::Sum(a, b) => a.expand_unchecked(n)?.add(&b.expand_unchecked(n)?),
            SlpExpression::Product(a, b) => a.expand_unchecked(n)?.mul(&b.expand_unchecked(n)?),
        })
    }
}

/// Free-function form of [`SlpExpression::expand`].
pub fn expand_slp(e: &SlpExpression, variable_count: usize, degree_cap: u32) -> Result<SparsePolynomial> {
    e.expand(variable_count, degree_cap)
}

impl fmt::Display for SlpExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlpExpression::Constant(c) => write!(f, "{}", format_rational(c)),
            SlpExpression::Variable(i) => write!(f, "x{}", i + 1),
            SlpExpression::Sum(a, b) => write!(f, "({a}+{b})"),
            SlpExpression::Product(a, b) => write!(f, "({a}*{b})"),
        }
    }
}

/// Parse an expression over `variable_count` variables.
pub fn parse_expression(text: &str, variable_count: usize) -> Result<SlpExpression> {
    let mut p = Parser {
        src: text.as_bytes(),
        text,
        pos: 0,
        n: variable_count,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<SlpExpression> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let lhs = self.expr()?;
                let op = match self.peek() {
                    Some(c @ (b'+' | b'*')) => {
                        self.pos += 1;
                        c
                    }
                    _ => return Err(self.error("expected `+` or `*`")),
                };
                let rhs = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(if op == b'+' {
                    SlpExpression::sum(lhs, rhs)
                } else {
                    SlpExpression::product(lhs, rhs)
                })
            }
            Some(b'x') => {
                let start = self.pos;
                self.pos += 1;
                let digits = self.digits();
                if digits.is_empty() {
                    return Err(self.error("expected variable index"));
                }
                let index: usize = digits.parse().map_err(|_| Error::Syntax {
                    offset: start,
                    message: "variable index too large".into(),
                })?;
                if index == 0 || index > self.n {
                    return Err(Error::VariableOutOfRange { index, count: self.n });
                }
                Ok(SlpExpression::Variable(index - 1))
            }
            Some(c) if c == b'-' || c.is_ascii_digit() => self.rational(),
            _ => Err(self.error("expected expression")),
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn rational(&mut self) -> Result<SlpExpression> {
        let start = self.pos;
        if self.src[self.pos] == b'-' {
            self.pos += 1;
        }
        if self.digits().is_empty() {
            return Err(self.error("expected digits"));
        }
        let save = self.pos;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            if self.digits().is_empty() {
                return Err(self.error("expected positive denominator"));
            }
        } else {
            self.pos = save;
        }
        let literal: String = self.text[start..self.pos]
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        let value = parse_rational(&literal)?;
        Ok(SlpExpression::Constant(value))
    }
}

/// `(x1^2 + … + xn^2)^k` as an SIU program with `3n + k + 2` style growth:
/// the sum is built once and the powers multiply fresh copies.
pub fn sum_of_squares_power(n: usize, k: u32) -> SlpExpression {
    let square_sum = || {
        let mut acc = SlpExpression::Constant(Rational::zero());
        for i in 0..n {
            let sq = SlpExpression::product(SlpExpression::Variable(i), SlpExpression::Variable(i));
            acc = SlpExpression::sum(acc, sq);
        }
        acc
    };
    let mut acc = SlpExpression::Constant(Rational::one());
    for _ in 0..k {
        acc = SlpExpression::product(acc, square_sum());
    }
    acc
}
