//! Multivariate power series in a few variables, truncated at a total degree.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::polynomial::{total_degree, Exponents, SparsePolynomial};

/// A power series in `D` variables with every term of total degree above
/// `cap` discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    variable_count: usize,
    cap: u32,
    terms: BTreeMap<Exponents, Rational>,
}

impl TruncatedSeries {
    pub fn zero(variable_count: usize, cap: u32) -> Self {
        TruncatedSeries {
            variable_count,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(variable_count: usize, cap: u32) -> Self {
        Self::constant(variable_count, cap, Rational::one())
    }

    pub fn constant(variable_count: usize, cap: u32, value: Rational) -> Self {
        let mut s = Self::zero(variable_count, cap);
        s.add_term(vec![0; variable_count], value);
        s
    }

    /// Truncate a polynomial to a series.
    pub fn from_polynomial(p: &SparsePolynomial, cap: u32) -> Self {
        let mut s = Self::zero(p.variable_count(), cap);
        for (e, c) in p.terms() {
            s.add_term(e.clone(), c.clone());
        }
        s
    }

    /// Build from `(exponents, coefficient)` pairs; terms above `cap` are
    /// dropped.
    pub fn from_terms(
        variable_count: usize,
        cap: u32,
        terms: impl IntoIterator<Item = (Exponents, Rational)>,
    ) -> Result<Self> {
        let mut s = Self::zero(variable_count, cap);
        for (e, c) in terms {
            if e.len() != variable_count {
                return Err(Error::DimensionMismatch {
                    expected: variable_count,
                    found: e.len(),
                });
            }
            s.add_term(e, c);
        }
        Ok(s)
    }

    /// The affine form `c + Σ_j a_j t_j`.
    pub fn affine(cap: u32, constant: Rational, linear: &[Rational]) -> Self {
        let d = linear.len();
        let mut s = Self::constant(d, cap, constant);
        for (j, a) in linear.iter().enumerate() {
            let mut e = vec![0; d];
            e[j] = 1;
            s.add_term(e, a.clone());
        }
        s
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&vec![0; self.variable_count])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, exps: Exponents, coef: Rational) {
        if coef.is_zero() || total_degree(&exps) > self.cap {
            return;
        }
        add_into(&mut self.terms, exps, coef);
    }

    /// Coefficient of `t^exponents`; asking above the cap is an error since
    /// that information was discarded.
    pub fn coefficient(&self, exponents: &[u32]) -> Result<Rational> {
        if exponents.len() != self.variable_count {
            return Err(Error::DimensionMismatch {
                expected: self.variable_count,
                found: exponents.len(),
            });
        }
        let degree = total_degree(exponents);
        if degree > self.cap {
            return Err(Error::ExponentAboveCap { degree, cap: self.cap });
        }
        Ok(self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero))
    }

    /// Drop everything above a smaller cap.
    pub fn truncate(&self, cap: u32) -> Self {
        let cap = cap.min(self.cap);
        TruncatedSeries {
            variable_count: self.variable_count,
            cap,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| total_degree(e) <= cap)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keep only terms whose exponents are componentwise `<= bound`. Only
    /// such terms can influence the coefficient of `t^bound` in any product
    /// of series with nonnegative exponents.
    pub fn restrict_to_box(&self, bound: &[u32]) -> Self {
        TruncatedSeries {
            variable_count: self.variable_count,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| within(e, bound))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Truncated product; the result keeps the smaller of the two caps.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<Self> {
        self.mul_bounded(other, None)
    }

    /// Truncated product that also discards terms outside the box `bound`.
    pub fn mul_bounded(&self, other: &TruncatedSeries, bound: Option<&[u32]>) -> Result<Self> {
        self.check_compatible(other)?;
        let cap = self.cap.min(other.cap);
        let mut out = BTreeMap::new();
        let mut e = vec![0u32; self.variable_count];
        for (ea, ca) in &self.terms {
            let da = total_degree(ea);
            for (eb, cb) in &other.terms {
                if da + total_degree(eb) > cap {
                    continue;
                }
                for (k, slot) in e.iter_mut().enumerate() {
                    *slot = ea[k] + eb[k];
                }
                if let Some(b) = bound {
                    if !within(&e, b) {
                        continue;
                    }
                }
                add_into(&mut out, e.clone(), ca * cb);
            }
        }
        Ok(TruncatedSeries {
            variable_count: self.variable_count,
            cap,
            terms: out,
        })
    }

    /// Multiplicative inverse up to the cap, by the graded recursion
    /// `b_0 = 1/a_0`, `b_k = -(1/a_0) Σ_{0<j≤k} a_j b_{k-j}` on homogeneous
    /// parts.
    pub fn reciprocal(&self) -> Result<Self> {
        self.reciprocal_bounded(None)
    }

    pub fn reciprocal_bounded(&self, bound: Option<&[u32]>) -> Result<Self> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = a0.recip();
        let cap = self.cap as usize;
        let mut graded_a: Vec<Vec<(&Exponents, &Rational)>> = vec![Vec::new(); cap + 1];
        for (e, c) in &self.terms {
            if bound.is_some_and(|b| !within(e, b)) {
                continue;
            }
            graded_a[total_degree(e) as usize].push((e, c));
        }
        let mut graded_b: Vec<Vec<(Exponents, Rational)>> = Vec::with_capacity(cap + 1);
        graded_b.push(vec![(vec![0; self.variable_count], inv.clone())]);
        let neg_inv = -inv;
        let mut e = vec![0u32; self.variable_count];
        for k in 1..=cap {
            let mut acc: BTreeMap<Exponents, Rational> = BTreeMap::new();
            for j in 1..=k {
                for &(ea, ca) in &graded_a[j] {
                    for (eb, cb) in &graded_b[k - j] {
                        for (t, slot) in e.iter_mut().enumerate() {
                            *slot = ea[t] + eb[t];
                        }
                        if bound.is_some_and(|b| !within(&e, b)) {
                            continue;
                        }
                        add_into(&mut acc, e.clone(), ca * cb);
                    }
                }
            }
            graded_b.push(acc.into_iter().map(|(e, c)| (e, c * &neg_inv)).collect());
        }
        let mut out = TruncatedSeries::zero(self.variable_count, self.cap);
        for layer in graded_b {
            for (e, c) in layer {
                out.add_term(e, c);
            }
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &TruncatedSeries) -> Result<()> {
        if self.variable_count != other.variable_count {
            return Err(Error::DimensionMismatch {
                expected: self.variable_count,
                found: other.variable_count,
            });
        }
        Ok(())
    }
}

fn within(e: &[u32], bound: &[u32]) -> bool {
    e.iter().zip(bound).all(|(a, b)| a <= b)
}

fn add_into(map: &mut BTreeMap<Exponents, Rational>, exps: Exponents, coef: Rational) {
    use std::collections::btree_map::Entry;
    if coef.is_zero() {
        return;
    }
    match map.entry(exps) {
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

/// Left fold of truncated products; the empty product is 1.
pub fn product_truncated(variable_count: usize, factors: &[TruncatedSeries], cap: u32) -> Result<TruncatedSeries> {
    product_truncated_bounded(variable_count, factors, cap, None)
}

pub fn product_truncated_bounded(
    variable_count: usize,
    factors: &[TruncatedSeries],
    cap: u32,
    bound: Option<&[u32]>,
) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(variable_count, cap);
    for f in factors {
        acc = acc.mul_bounded(f, bound)?;
    }
    Ok(acc)
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*t{}", i + 1)?,
                    _ => write!(f, "*t{}^{}", i + 1, p)?,
                }
            }
        }
        write!(f, " + O(deg {})", self.cap + 1)
    }
}
