//! Integration through the symmetric multilinear form of a homogeneous
//! polynomial.

use num_traits::Zero;

use crate::arith::{binomial, compositions, factorial, Rational};
use crate::error::{Error, Result};
use crate::polynomial::SparsePolynomial;
use crate::simplex::Simplex;

/// Default bound on the degree a polarization may have.
pub const DEFAULT_POLARIZATION_CAP: u32 = 8;

/// Evaluator of `H_f(x_1, …, x_M) = 1/(2^M M!) Σ_ε ε_1⋯ε_M f(Σ ε_i x_i)`.
#[derive(Debug, Clone)]
pub struct Polarization {
    form: SparsePolynomial,
    degree: u32,
}

/// Polarize a homogeneous `f` of degree at most `cap`. The zero
/// polynomial polarizes to the zero form of degree 0.
pub fn polarize(f: &SparsePolynomial, cap: u32) -> Result<Polarization> {
    let degree = if f.is_zero() {
        0
    } else {
        f.homogeneous_degree().ok_or(Error::NotHomogeneous)?
    };
    if degree > cap {
        return Err(Error::PolarizationCapExceeded { degree, cap });
    }
    Ok(Polarization {
        form: f.clone(),
        degree,
    })
}

impl Polarization {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn evaluate(&self, points: &[Vec<Rational>]) -> Result<Rational> {
        let m = self.degree as usize;
        if points.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: points.len(),
            });
        }
        let n = self.form.variable_count();
        if let Some(bad) = points.iter().find(|p| p.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        if m == 0 {
            return Ok(self.form.coefficient(&vec![0; n]));
        }
        // f(-x) = (-1)^M f(x), so sign patterns pair up; fix ε_1 = +1
        let mut total = Rational::zero();
        let mut sum = vec![Rational::zero(); n];
        for mask in 0u64..(1u64 << (m - 1)) {
            for (k, slot) in sum.iter_mut().enumerate() {
                *slot = points[0][k].clone();
            }
            let mut negatives = 0;
            for (i, p) in points.iter().enumerate().skip(1) {
                let negative = mask >> (i - 1) & 1 == 1;
                negatives += negative as u32;
                for (slot, x) in sum.iter_mut().zip(p) {
                    if negative {
                        *slot -= x;
                    } else {
                        *slot += x;
                    }
                }
            }
            let value = self.form.evaluate(&sum)?;
            if negatives % 2 == 1 {
                total -= value;
            } else {
                total += value;
            }
        }
        let scale = Rational::from_integer(factorial(self.degree) * num_bigint::BigInt::from(1u64 << (m - 1)));
        Ok(total / scale)
    }
}

/// `∫_Δ f dm = vol/C(M+d, M) Σ_{i_1≤…≤i_M} H_f(s_{i_1}, …, s_{i_M})` for
/// each homogeneous component of degree `M`.
pub fn integrate_via_polarization(simplex: &Simplex, f: &SparsePolynomial, cap: u32) -> Result<Rational> {
    let d = simplex.dimension() as u32;
    let verts = simplex.vertices();
    let mut total = Rational::zero();
    for (degree, component) in f.homogeneous_components() {
        if degree == 0 {
            total += component.coefficient(&vec![0; f.variable_count()]) * simplex.volume();
            continue;
        }
        let h = polarize(&component, cap)?;
        let mut sum = Rational::zero();
        let mut points = Vec::with_capacity(degree as usize);
        for k in compositions(degree, verts.len()) {
            points.clear();
            for (j, &kj) in k.parts().iter().enumerate() {
                points.extend(std::iter::repeat_n(verts[j].clone(), kj as usize));
            }
            sum += h.evaluate(&points)?;
        }
        total += sum * simplex.volume() / Rational::from_integer(binomial(degree + d, degree));
    }
    Ok(total)
}
