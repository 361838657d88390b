//! Exact integration of polynomials over rational simplices.

mod duality;
mod laurent;
mod linear;
mod polarization;
mod waring;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

pub use duality::{
    integrate_monomial_canonical, integrate_product_linear_powers_duality, integrate_via_duality, DEFAULT_DUALITY_CAP,
};
pub use laurent::integrate_via_laurent;
pub use linear::{
    bigsum_term_count, integrate_linear_power, integrate_linear_power_bigsum, integrate_linear_power_regular,
    integrate_linear_power_residue, is_regular,
};
pub use polarization::{integrate_via_polarization, polarize, Polarization, DEFAULT_POLARIZATION_CAP};
pub use waring::{
    count_primitive_forms, decompose_monomial, decompose_polynomial, integrate_via_waring, integrate_via_waring_with,
    is_normalized_primitive, PowerOfLinearForm,
};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::polynomial::{detect_power_of_linear_form, LinearForm, SlpExpression, SparsePolynomial};
use crate::simplex::Simplex;

/// Default number of compositions the big-sum oracle may enumerate.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MethodChoice {
    Bigsum,
    BrionRegular,
    Residue,
    Waring,
    Duality,
    Laurent,
    Polarization,
    Auto,
}

impl MethodChoice {
    pub const ALL: [MethodChoice; 8] = [
        MethodChoice::Bigsum,
        MethodChoice::BrionRegular,
        MethodChoice::Residue,
        MethodChoice::Waring,
        MethodChoice::Duality,
        MethodChoice::Laurent,
        MethodChoice::Polarization,
        MethodChoice::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodChoice::Bigsum => "bigsum",
            MethodChoice::BrionRegular => "brion-regular",
            MethodChoice::Residue => "residue",
            MethodChoice::Waring => "waring",
            MethodChoice::Duality => "duality",
            MethodChoice::Laurent => "laurent",
            MethodChoice::Polarization => "polarization",
            MethodChoice::Auto => "auto",
        }
    }
}

impl fmt::Display for MethodChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MethodChoice::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown method `{s}`")))
    }
}

/// Caps shared by all methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegrationConfig {
    pub enumeration_limit: u64,
    pub duality_cap: usize,
    pub polarization_cap: u32,
}

impl Default for IntegrationConfig {
    fn default() -> Self {
        IntegrationConfig {
            enumeration_limit: DEFAULT_ENUMERATION_LIMIT,
            duality_cap: DEFAULT_DUALITY_CAP,
            polarization_cap: DEFAULT_POLARIZATION_CAP,
        }
    }
}

/// The accepted polynomial representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolynomialInput {
    Expression(SlpExpression),
    Sparse(SparsePolynomial),
    LinearPower { form: LinearForm, exponent: u32 },
}

impl PolynomialInput {
    /// Expanded sparse form in `n` variables.
    pub fn to_sparse(&self, n: usize) -> Result<SparsePolynomial> {
        match self {
            PolynomialInput::Expression(e) => e.expand(n, e.formal_degree()),
            PolynomialInput::Sparse(p) => {
                if p.variable_count() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: p.variable_count(),
                    });
                }
                Ok(p.clone())
            }
            PolynomialInput::LinearPower { form, exponent } => {
                check_form(form, n)?;
                Ok(SparsePolynomial::from_linear_form(form).pow(*exponent))
            }
        }
    }
}

fn check_form(form: &LinearForm, n: usize) -> Result<()> {
    if form.dimension() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: form.dimension(),
        });
    }
    Ok(())
}

/// `∫_Δ f dm` by the requested method. Returns the value and the concrete
/// method that produced it.
pub fn integrate(
    simplex: &Simplex,
    input: &PolynomialInput,
    method: MethodChoice,
    config: &IntegrationConfig,
) -> Result<(Rational, MethodChoice)> {
    let n = simplex.ambient_dimension();
    if let PolynomialInput::LinearPower { form, exponent } = input {
        check_form(form, n)?;
        let m = *exponent;
        let value = match method {
            MethodChoice::Auto | MethodChoice::Waring => return vertex_formula(simplex, form, m),
            MethodChoice::Bigsum => integrate_linear_power_bigsum(simplex, form, m, config.enumeration_limit)?,
            MethodChoice::BrionRegular => integrate_linear_power_regular(simplex, form, m)?,
            MethodChoice::Residue => integrate_linear_power_residue(simplex, form, m)?,
            MethodChoice::Duality => {
                integrate_product_linear_powers_duality(simplex, std::slice::from_ref(form), &[m], config.duality_cap)?
            }
            MethodChoice::Laurent | MethodChoice::Polarization => {
                let f = input.to_sparse(n)?;
                return integrate_sparse(simplex, &f, method, config);
            }
        };
        return Ok((value, method));
    }
    let f = input.to_sparse(n)?;
    integrate_sparse(simplex, &f, method, config)
}

/// `integrate` for an already expanded polynomial.
pub fn integrate_sparse(
    simplex: &Simplex,
    f: &SparsePolynomial,
    method: MethodChoice,
    config: &IntegrationConfig,
) -> Result<(Rational, MethodChoice)> {
    let n = simplex.ambient_dimension();
    if f.variable_count() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: f.variable_count(),
        });
    }
    let method = match method {
        MethodChoice::Auto => {
            if f.is_zero() {
                return Ok((Rational::zero(), MethodChoice::Waring));
            }
            if let Some((form, m)) = detect_power_of_linear_form(f) {
                return vertex_formula(simplex, &form, m);
            }
            auto_method(simplex, f)
        }
        other => other,
    };
    let value = match method {
        MethodChoice::Bigsum => integrate_via_waring_with(simplex, f, |s, l, m| {
            integrate_linear_power_bigsum(s, l, m, config.enumeration_limit)
        })?,
        MethodChoice::BrionRegular => integrate_via_waring_with(simplex, f, integrate_linear_power_regular)?,
        MethodChoice::Residue => integrate_via_waring_with(simplex, f, integrate_linear_power_residue)?,
        MethodChoice::Waring => integrate_via_waring(simplex, f)?,
        MethodChoice::Duality => integrate_via_duality(simplex, f, config.duality_cap)?,
        MethodChoice::Laurent => integrate_via_laurent(simplex, f)?,
        MethodChoice::Polarization => integrate_via_polarization(simplex, f, config.polarization_cap)?,
        MethodChoice::Auto => unreachable!("resolved above"),
    };
    Ok((value, method))
}

/// `ℓ^M` by the vertex sum, reporting which of its two forms applied.
fn vertex_formula(simplex: &Simplex, form: &LinearForm, m: u32) -> Result<(Rational, MethodChoice)> {
    let method = if is_regular(simplex, form)? {
        MethodChoice::BrionRegular
    } else {
        MethodChoice::Residue
    };
    Ok((integrate_linear_power(simplex, form, m)?, method))
}

/// Laurent (or duality off full dimension) when every monomial has at most
/// three effective variables or the dimension is at most 5; powers of
/// linear forms otherwise.
fn auto_method(simplex: &Simplex, f: &SparsePolynomial) -> MethodChoice {
    let few_effective = f.monomials().all(|m| m.effective_variables().len() <= 3);
    if few_effective || simplex.ambient_dimension() <= 5 {
        if simplex.is_full_dimensional() {
            MethodChoice::Laurent
        } else {
            MethodChoice::Duality
        }
    } else {
        MethodChoice::Waring
    }
}
