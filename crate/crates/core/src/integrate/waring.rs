//! Decomposition of monomials into powers of linear forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linear::linear_power_from_values;
use crate::arith::{binomial, factorial, moebius, Rational};
use crate::error::Result;
use crate::polynomial::{total_degree, LinearForm, SparsePolynomial};
use crate::simplex::Simplex;

/// The summand `coefficient · form^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerOfLinearForm {
    pub form: LinearForm,
    pub exponent: u32,
    pub coefficient: Rational,
}

impl PowerOfLinearForm {
    pub fn to_polynomial(&self) -> SparsePolynomial {
        SparsePolynomial::from_linear_form(&self.form)
            .pow(self.exponent)
            .scale(&self.coefficient)
    }
}

type Primitive = Vec<BigInt>;

/// `x^M = (1/|M|!) Σ_{0≤p≤M} (-1)^{|M|-|p|} Π C(M_i,p_i) (Σ p_i x_i)^{|M|}`,
/// with proportional forms merged onto primitive representatives.
pub fn decompose_monomial(exponents: &[u32]) -> Vec<PowerOfLinearForm> {
    let degree = total_degree(exponents);
    let mut merged = BTreeMap::new();
    accumulate_monomial(exponents, &Rational::one(), &mut merged);
    merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, coefficient)| PowerOfLinearForm {
            form: LinearForm::new(p.into_iter().map(Rational::from_integer).collect()),
            exponent: degree,
            coefficient,
        })
        .collect()
}

/// Add `scale · x^M`, decomposed, into `acc` keyed by primitive form.
fn accumulate_monomial(exponents: &[u32], scale: &Rational, acc: &mut BTreeMap<Primitive, Rational>) {
    let degree = total_degree(exponents);
    let base = scale / Rational::from_integer(factorial(degree));
    let n = exponents.len();
    let mut p = vec![0u32; n];
    loop {
        // advance odometer; the all-zero vector is skipped
        let mut i = 0;
        while i < n && p[i] == exponents[i] {
            p[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        p[i] += 1;

        let sum: u32 = p.iter().sum();
        let mut c = base.clone();
        for (m, q) in exponents.iter().zip(&p) {
            c *= Rational::from_integer(binomial(*m, *q));
        }
        if (degree - sum) % 2 == 1 {
            c = -c;
        }
        let g = p.iter().fold(0u32, |g, &x| g.gcd(&x));
        c *= Rational::from_integer(num_traits::pow(BigInt::from(g), degree as usize));
        let primitive: Primitive = p.iter().map(|&x| BigInt::from(x / g)).collect();
        add_into(acc, primitive, c);
    }
}

fn add_into(acc: &mut BTreeMap<Primitive, Rational>, key: Primitive, c: Rational) {
    let slot = acc.entry(key).or_insert_with(Rational::zero);
    *slot += c;
}

/// Decompose every homogeneous component of `f`, merging equal primitive
/// forms of equal exponent across monomials. Constants are returned
/// separately.
pub fn decompose_polynomial(f: &SparsePolynomial) -> (Rational, Vec<PowerOfLinearForm>) {
    let mut by_degree: BTreeMap<u32, BTreeMap<Primitive, Rational>> = BTreeMap::new();
    let mut constant = Rational::zero();
    for (e, c) in f.terms() {
        let degree = total_degree(e);
        if degree == 0 {
            constant += c;
            continue;
        }
        accumulate_monomial(e, c, by_degree.entry(degree).or_default());
    }
    let powers = by_degree
        .into_iter()
        .flat_map(|(degree, forms)| {
            forms
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(p, coefficient)| PowerOfLinearForm {
                    form: LinearForm::new(p.into_iter().map(Rational::from_integer).collect()),
                    exponent: degree,
                    coefficient,
                })
        })
        .collect();
    (constant, powers)
}

/// `F(n,M) = Σ_{d=1}^{M} μ(d) (C(n+⌊M/d⌋, n) - 1)`: the number of
/// primitive forms `p ∈ N^n`, `0 < |p| ≤ M`.
pub fn count_primitive_forms(n: u32, max_degree: u32) -> BigInt {
    let mut total = BigInt::zero();
    for d in 1..=max_degree {
        let mu = moebius(d as u64);
        if mu == 0 {
            continue;
        }
        let term = binomial(n + max_degree / d, n) - BigInt::one();
        if mu > 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `∫_Δ f dm` via the decomposition of every monomial into powers of
/// linear forms, each integrated by the vertex formulas.
pub fn integrate_via_waring(simplex: &Simplex, f: &SparsePolynomial) -> Result<Rational> {
    integrate_via_waring_with(simplex, f, |simplex, form, exponent| {
        let values = simplex.vertex_values(form)?;
        Ok(linear_power_from_values(simplex, &values, exponent))
    })
}

/// Same decomposition with a caller-chosen integrator for each power.
pub fn integrate_via_waring_with<F>(simplex: &Simplex, f: &SparsePolynomial, mut power: F) -> Result<Rational>
where
    F: FnMut(&Simplex, &LinearForm, u32) -> Result<Rational>,
{
    let (constant, powers) = decompose_polynomial(f);
    let mut total = constant * simplex.volume();
    for term in &powers {
        total += &term.coefficient * power(simplex, &term.form, term.exponent)?;
    }
    Ok(total)
}

/// Whether a primitive form has a positive first nonzero entry and coprime
/// integer entries.
pub fn is_normalized_primitive(form: &LinearForm) -> bool {
    let coefs = form.coefficients();
    if coefs.iter().any(|c| !c.is_integer()) {
        return false;
    }
    let Some(first) = coefs.iter().find(|c| !c.is_zero()) else {
        return false;
    };
    let g = coefs.iter().fold(BigInt::zero(), |g, c| g.gcd(&c.to_integer()));
    first.is_positive() && g.is_one()
}
