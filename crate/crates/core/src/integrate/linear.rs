//! Integrals of a power of one linear form.
//!
//! All three routes share the prefactor `d!·vol(Δ,dm)·M!/(M+d)!` and differ
//! only in how they evaluate the remaining vertex-value sum:
//!
//! * big sum: `Σ_{|k|=M} Π_j a_j^{k_j}` over all weak compositions (an
//!   exponential-size reference oracle);
//! * regular vertex sum: `Σ_i a_i^{M+d} / Π_{j≠i}(a_i - a_j)` when the
//!   values `a_i = ⟨ℓ,s_i⟩` are pairwise distinct;
//! * residues: one residue per distinct value, read off a truncated
//!   univariate series in ε.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{self, binomial, compositions, factorial, Rational};
use crate::error::{Error, Result};
use crate::polynomial::LinearForm;
use crate::series::{product_truncated, TruncatedSeries};
use crate::simplex::{pole_structure, Pole, Simplex};

/// `d!·vol·M!/(M+d)!`
fn prefactor(simplex: &Simplex, exponent: u32) -> Rational {
    let d = simplex.dimension() as u32;
    simplex.normalized_volume() * Rational::new(factorial(exponent), factorial(exponent + d))
}

/// Reference oracle enumerating all `C(M+d, d)` compositions.
pub fn integrate_linear_power_bigsum(
    simplex: &Simplex,
    form: &LinearForm,
    exponent: u32,
    enumeration_limit: u64,
) -> Result<Rational> {
    let values = simplex.vertex_values(form)?;
    let d = simplex.dimension() as u32;
    let count = binomial(exponent + d, d);
    if count > BigInt::from(enumeration_limit) {
        return Err(Error::EnumerationLimitExceeded {
            count: count.to_string(),
            limit: enumeration_limit,
        });
    }
    let powers: Vec<Vec<Rational>> = values
        .iter()
        .map(|a| {
            let mut row = Vec::with_capacity(exponent as usize + 1);
            let mut acc = Rational::one();
            for _ in 0..=exponent {
                row.push(acc.clone());
                acc *= a;
            }
            row
        })
        .collect();
    let mut sum = Rational::zero();
    for k in compositions(exponent, values.len()) {
        let mut term = Rational::one();
        for (j, &kj) in k.parts().iter().enumerate() {
            if kj > 0 {
                term *= &powers[j][kj as usize];
                if term.is_zero() {
                    break;
                }
            }
        }
        sum += term;
    }
    Ok(prefactor(simplex, exponent) * sum)
}

/// `∫_Δ ℓ^M dm`: the short vertex sum when `ℓ` is regular, residues
/// otherwise.
pub fn integrate_linear_power(simplex: &Simplex, form: &LinearForm, exponent: u32) -> Result<Rational> {
    let values = simplex.vertex_values(form)?;
    Ok(linear_power_from_values(simplex, &values, exponent))
}

pub(crate) fn linear_power_from_values(simplex: &Simplex, values: &[Rational], exponent: u32) -> Rational {
    let poles = pole_structure(values);
    if poles.len() == values.len() {
        regular_sum(values, exponent + simplex.dimension() as u32) * prefactor(simplex, exponent)
    } else {
        residue_sum(&poles, exponent + simplex.dimension() as u32) * prefactor(simplex, exponent)
    }
}

/// Whether `ℓ` takes pairwise distinct values on the vertices.
pub fn is_regular(simplex: &Simplex, form: &LinearForm) -> Result<bool> {
    let values = simplex.vertex_values(form)?;
    Ok(pole_structure(&values).len() == values.len())
}

/// Short formula; errors if two vertex values coincide.
pub fn integrate_linear_power_regular(simplex: &Simplex, form: &LinearForm, exponent: u32) -> Result<Rational> {
    let values = simplex.vertex_values(form)?;
    if pole_structure(&values).len() != values.len() {
        return Err(Error::IrregularLinearForm);
    }
    Ok(regular_sum(&values, exponent + simplex.dimension() as u32) * prefactor(simplex, exponent))
}

/// Residue formula for every input, regular or not.
pub fn integrate_linear_power_residue(simplex: &Simplex, form: &LinearForm, exponent: u32) -> Result<Rational> {
    let values = simplex.vertex_values(form)?;
    let poles = pole_structure(&values);
    Ok(residue_sum(&poles, exponent + simplex.dimension() as u32) * prefactor(simplex, exponent))
}

/// `Σ_i a_i^N / Π_{j≠i}(a_i - a_j)` for pairwise distinct `a_i`.
fn regular_sum(values: &[Rational], power: u32) -> Rational {
    let mut sum = Rational::zero();
    for (i, ai) in values.iter().enumerate() {
        if ai.is_zero() && power > 0 {
            continue;
        }
        let mut denom = Rational::one();
        for (j, aj) in values.iter().enumerate() {
            if i != j {
                denom *= ai - aj;
            }
        }
        sum += arith::pow(ai, power) / denom;
    }
    sum
}

/// `Σ_k Res_{ε=0} (ε+a_k)^N / (ε^{m_k} Π_{i≠k}(ε + a_k - a_i)^{m_i})`.
fn residue_sum(poles: &[Pole], power: u32) -> Rational {
    poles.iter().map(|p| residue_at(p, poles, power)).sum()
}

fn residue_at(pole: &Pole, poles: &[Pole], power: u32) -> Rational {
    let cap = (pole.multiplicity - 1) as u32;
    let mut factors = Vec::new();
    for other in poles {
        if other.representative == pole.representative {
            continue;
        }
        let shift = &pole.value - &other.value;
        let f = TruncatedSeries::affine(cap, shift, &[Rational::one()]);
        factors.extend(std::iter::repeat_n(f, other.multiplicity));
    }
    let denominator = product_truncated(1, &factors, cap).expect("univariate factors");
    let inverse = denominator
        .reciprocal()
        .expect("distinct pole values give a nonzero constant term");
    // (ε + a)^N truncated at ε^cap
    let numerator = TruncatedSeries::from_terms(
        1,
        cap,
        (0..=cap.min(power)).map(|j| {
            let c = Rational::from_integer(binomial(power, j)) * arith::pow(&pole.value, power - j);
            (vec![j], c)
        }),
    )
    .expect("univariate terms");
    numerator
        .mul(&inverse)
        .expect("same variable count")
        .coefficient(&[cap])
        .expect("within cap")
}

/// Number of compositions the big-sum oracle would enumerate.
pub fn bigsum_term_count(simplex: &Simplex, exponent: u32) -> Option<u64> {
    binomial(exponent + simplex.dimension() as u32, simplex.dimension() as u32).to_u64()
}
