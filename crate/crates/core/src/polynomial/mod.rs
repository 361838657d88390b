//! Polynomial representations: sparse monomial form, linear forms, and the
//! single-intermediate-use expression encoding.

mod power;
mod slp;

pub use power::detect_power_of_linear_form;
pub use slp::{expand_slp, parse_expression, sum_of_squares_power, SlpExpression};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// An exponent vector, one entry per ambient variable.
pub type Exponents = Vec<u32>;

pub fn total_degree(exps: &[u32]) -> u32 {
    exps.iter().sum()
}

/// A single term `c · x^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coefficient: Rational,
    pub exponents: Exponents,
}

impl Monomial {
    pub fn new(coefficient: Rational, exponents: Exponents) -> Self {
        Monomial { coefficient, exponents }
    }

    pub fn degree(&self) -> u32 {
        total_degree(&self.exponents)
    }

    /// Zero-based indices of the variables with a positive exponent.
    pub fn effective_variables(&self) -> Vec<usize> {
        effective_variables(&self.exponents)
    }
}

/// Zero-based indices of the variables that actually occur in `exps`.
pub fn effective_variables(exps: &[u32]) -> Vec<usize> {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, _)| i)
        .collect()
}

/// A polynomial in `n` variables with rational coefficients, stored as a map
/// from exponent vector to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    variable_count: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl SparsePolynomial {
    pub fn zero(variable_count: usize) -> Self {
        SparsePolynomial {
            variable_count,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(variable_count: usize, value: Rational) -> Self {
        let mut p = Self::zero(variable_count);
        p.add_term(vec![0; variable_count], value);
        p
    }

    /// The coordinate function `x_index` (zero-based).
    pub fn variable(variable_count: usize, index: usize) -> Self {
        let mut exps = vec![0; variable_count];
        exps[index] = 1;
        let mut p = Self::zero(variable_count);
        p.add_term(exps, Rational::one());
        p
    }

    pub fn from_monomials(variable_count: usize, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut p = Self::zero(variable_count);
        for m in monomials {
            if m.exponents.len() != variable_count {
                return Err(Error::DimensionMismatch {
                    expected: variable_count,
                    found: m.exponents.len(),
                });
            }
            p.add_term(m.exponents, m.coefficient);
        }
        Ok(p)
    }

    /// Ingest a dense coefficient list: one coefficient per monomial of total
    /// degree at most `degree`, in graded lexicographic order (degree 0 first,
    /// then within each degree the exponent vectors in descending
    /// lexicographic order, so `x1` precedes `x2`).
    pub fn from_dense(variable_count: usize, degree: u32, coefficients: &[Rational]) -> Result<Self> {
        let exps = dense_monomial_order(variable_count, degree);
        if exps.len() != coefficients.len() {
            return Err(Error::DimensionMismatch {
                expected: exps.len(),
                found: coefficients.len(),
            });
        }
        let mut p = Self::zero(variable_count);
        for (e, c) in exps.into_iter().zip(coefficients) {
            p.add_term(e, c.clone());
        }
        Ok(p)
    }

    /// The linear polynomial `Σ ℓ_i x_i`.
    pub fn from_linear_form(form: &LinearForm) -> Self {
        let n = form.dimension();
        let mut p = Self::zero(n);
        for (i, c) in form.coefficients().iter().enumerate() {
            let mut exps = vec![0; n];
            exps[i] = 1;
            p.add_term(exps, c.clone());
        }
        p
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|(e, c)| Monomial::new(c.clone(), e.clone()))
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximum total degree over the terms; zero for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| total_degree(e)).max().unwrap_or(0)
    }

    /// `Some(M)` when every term has total degree `M`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| total_degree(e));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Split into homogeneous parts keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, SparsePolynomial> {
        let mut parts: BTreeMap<u32, SparsePolynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            parts
                .entry(total_degree(e))
                .or_insert_with(|| SparsePolynomial::zero(self.variable_count))
                .add_term(e.clone(), c.clone());
        }
        parts
    }

    /// Add `coef · x^exps`, dropping the entry if it cancels.
    pub fn add_term(&mut self, exps: Exponents, coef: Rational) {
        debug_assert_eq!(exps.len(), self.variable_count);
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.variable_count, other.variable_count);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> SparsePolynomial {
        if factor.is_zero() {
            return SparsePolynomial::zero(self.variable_count);
        }
        SparsePolynomial {
            variable_count: self.variable_count,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * factor)).collect(),
        }
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.variable_count, other.variable_count);
        let mut out = SparsePolynomial::zero(self.variable_count);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> SparsePolynomial {
        let mut acc = SparsePolynomial::constant(self.variable_count, Rational::one());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.variable_count {
            return Err(Error::DimensionMismatch {
                expected: self.variable_count,
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term *= arith::pow(x, k);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Compose with the affine map `x = A u + b`, where `A` has one row per
    /// variable of `self` and `target_count` columns. Returns the polynomial
    /// in `u`.
    pub fn pull_back(
        &self,
        matrix: &[Vec<Rational>],
        offset: &[Rational],
        target_count: usize,
    ) -> Result<SparsePolynomial> {
        if matrix.len() != self.variable_count || offset.len() != self.variable_count {
            return Err(Error::DimensionMismatch {
                expected: self.variable_count,
                found: matrix.len().min(offset.len()),
            });
        }
        let images: Vec<SparsePolynomial> = matrix
            .iter()
            .zip(offset)
            .map(|(row, b)| {
                if row.len() != target_count {
                    return Err(Error::DimensionMismatch {
                        expected: target_count,
                        found: row.len(),
                    });
                }
                let mut p = SparsePolynomial::constant(target_count, b.clone());
                for (j, a) in row.iter().enumerate() {
                    let mut e = vec![0; target_count];
                    e[j] = 1;
                    p.add_term(e, a.clone());
                }
                Ok(p)
            })
            .collect::<Result<_>>()?;
        // powers[i][k] = images[i]^k, built on demand
        let mut powers: Vec<Vec<SparsePolynomial>> = images
            .iter()
            .map(|_| vec![SparsePolynomial::constant(target_count, Rational::one())])
            .collect();
        let mut out = SparsePolynomial::zero(target_count);
        for (e, c) in &self.terms {
            let mut term = SparsePolynomial::constant(target_count, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if k > 0 {
                    term = term.mul(&powers[i][k as usize]);
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    pub fn to_json_terms(&self) -> Vec<SparseTermJson> {
        self.terms
            .iter()
            .map(|(e, c)| SparseTermJson {
                coef: format_rational(c),
                exps: e.clone(),
            })
            .collect()
    }

    pub fn from_json_terms(variable_count: usize, terms: &[SparseTermJson]) -> Result<Self> {
        let monomials = terms
            .iter()
            .map(|t| Ok(Monomial::new(parse_rational(&t.coef)?, t.exps.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_monomials(variable_count, monomials)
    }

    /// Parse the JSON list form; the variable count is taken from the first
    /// exponent vector (an empty list needs `fallback_count`).
    pub fn from_json(text: &str, fallback_count: Option<usize>) -> Result<Self> {
        let terms: Vec<SparseTermJson> = serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let n = terms
            .first()
            .map(|t| t.exps.len())
            .or(fallback_count)
            .ok_or_else(|| Error::InvalidInput("empty term list without a variable count".into()))?;
        Self::from_json_terms(n, &terms)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, p)?,
                }
            }
        }
        Ok(())
    }
}

/// One entry of the sparse JSON form `{"coef": "p/q", "exps": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseTermJson {
    pub coef: String,
    pub exps: Vec<u32>,
}

/// Monomials of total degree at most `degree` in graded order, the layout
/// expected by [`SparsePolynomial::from_dense`].
pub fn dense_monomial_order(variable_count: usize, degree: u32) -> Vec<Exponents> {
    let mut out = Vec::new();
    for d in 0..=degree {
        if variable_count == 0 {
            if d == 0 {
                out.push(Vec::new());
            }
            continue;
        }
        let mut block: Vec<Exponents> = arith::compositions(d, variable_count)
            .map(arith::Composition::into_parts)
            .collect();
        block.reverse();
        out.extend(block);
    }
    out
}

/// A linear form `x ↦ Σ ℓ_i x_i` on `Q^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coefficients: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        LinearForm { coefficients }
    }

    pub fn from_integers(coefficients: &[i64]) -> Self {
        LinearForm::new(coefficients.iter().map(|&c| arith::int(c)).collect())
    }

    /// The coordinate form `x_index` in `n` variables.
    pub fn coordinate(n: usize, index: usize) -> Self {
        let mut c = vec![Rational::zero(); n];
        c[index] = Rational::one();
        LinearForm::new(c)
    }

    pub fn dimension(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// `⟨ℓ, v⟩`.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.coefficients.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coefficients.len(),
                found: point.len(),
            });
        }
        Ok(self.coefficients.iter().zip(point).map(|(a, b)| a * b).sum())
    }
}

/// `⟨ℓ, v⟩` as a free function.
pub fn evaluate_linear_form(form: &LinearForm, point: &[Rational]) -> Result<Rational> {
    form.evaluate(point)
}
