//! Products of powers of linear forms through the Taylor expansion of
//! `1 / Π_i (1 - Σ_j t_j ⟨ℓ_j, s_i⟩)`.

use num_traits::{One, Zero};

use crate::arith::{factorial, Rational};
use crate::error::{Error, Result};
use crate::polynomial::{effective_variables, total_degree, LinearForm, SparsePolynomial};
use crate::series::{product_truncated_bounded, TruncatedSeries};
use crate::simplex::Simplex;

/// Default bound on the number of distinct forms in one product.
pub const DEFAULT_DUALITY_CAP: usize = 8;

/// `∫_Δ Π_j ℓ_j^{M_j} dm`.
pub fn integrate_product_linear_powers_duality(
    simplex: &Simplex,
    forms: &[LinearForm],
    exponents: &[u32],
    cap: usize,
) -> Result<Rational> {
    if forms.len() != exponents.len() {
        return Err(Error::DimensionMismatch {
            expected: forms.len(),
            found: exponents.len(),
        });
    }
    if forms.len() > cap {
        return Err(Error::EffectiveVariableCapExceeded {
            count: forms.len(),
            cap,
        });
    }
    let total = total_degree(exponents);
    let d = simplex.dimension() as u32;
    let mut factors = Vec::with_capacity(simplex.vertices().len());
    for vertex in simplex.vertices() {
        let linear = forms
            .iter()
            .map(|l| l.evaluate(vertex).map(|v| -v))
            .collect::<Result<Vec<_>>>()?;
        factors.push(TruncatedSeries::affine(total, Rational::one(), &linear));
    }
    let bound = Some(exponents);
    let product = product_truncated_bounded(forms.len(), &factors, total, bound)?;
    let coefficient = product.reciprocal_bounded(bound)?.coefficient(exponents)?;
    if coefficient.is_zero() {
        return Ok(coefficient);
    }
    let mut scale = simplex.normalized_volume() / Rational::from_integer(factorial(total + d));
    for &m in exponents {
        scale *= Rational::from_integer(factorial(m));
    }
    Ok(coefficient * scale)
}

/// Monomial by monomial, with the coordinate forms of each monomial's
/// effective variables.
pub fn integrate_via_duality(simplex: &Simplex, f: &SparsePolynomial, cap: usize) -> Result<Rational> {
    let n = f.variable_count();
    let mut total = Rational::zero();
    for (e, c) in f.terms() {
        let vars = effective_variables(e);
        let forms: Vec<LinearForm> = vars.iter().map(|&i| LinearForm::coordinate(n, i)).collect();
        let exps: Vec<u32> = vars.iter().map(|&i| e[i]).collect();
        total += c * integrate_product_linear_powers_duality(simplex, &forms, &exps, cap)?;
    }
    Ok(total)
}

/// `∫ x^m dm` over `conv(e_1, …, e_n)`: `Π m_i! / (|m| + n - 1)!`.
pub fn integrate_monomial_canonical(exponents: &[u32]) -> Rational {
    let n = exponents.len() as u32;
    let mut numer = num_bigint::BigInt::one();
    for &m in exponents {
        numer *= factorial(m);
    }
    Rational::new(numer, factorial(total_degree(exponents) + n - 1))
}
