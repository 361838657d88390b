use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use super::{LinearForm, SparsePolynomial};
use crate::arith::{self, Rational};

/// Decide whether `f = ℓ^M` for a linear form `ℓ`, and if so return one such
/// `(ℓ, M)` with `M` the total degree of `f`.
///
/// For even `M` the returned form has a positive first nonzero coefficient;
/// for odd `M` the sign is forced by `f`. The candidate is read off the
/// `x_i^M` and `x_i^{M-1} x_j` coefficients and confirmed by re-expansion.
pub fn detect_power_of_linear_form(f: &SparsePolynomial) -> Option<(LinearForm, u32)> {
    let degree = f.homogeneous_degree()?;
    if degree == 0 {
        return None;
    }
    let n = f.variable_count();
    let pure_power = |i: usize| {
        let mut e = vec![0; n];
        e[i] = degree;
        e
    };
    let (pivot, lead) = (0..n).find_map(|i| {
        let c = f.coefficient(&pure_power(i));
        (!c.is_zero()).then_some((i, c))
    })?;
    let root = rational_root(&lead, degree)?;
    let denom = arith::pow(&root, degree - 1) * Rational::from_integer(BigInt::from(degree));
    let mut coefficients = vec![Rational::zero(); n];
    for (j, slot) in coefficients.iter_mut().enumerate() {
        if j == pivot {
            *slot = root.clone();
            continue;
        }
        let mut e = vec![0; n];
        e[pivot] = degree - 1;
        e[j] += 1;
        *slot = f.coefficient(&e) / &denom;
    }
    let form = LinearForm::new(coefficients);
    let expanded = SparsePolynomial::from_linear_form(&form).pow(degree);
    (expanded == *f).then_some((form, degree))
}

/// Rational `k`-th root of `value`, positive for even `k`.
fn rational_root(value: &Rational, k: u32) -> Option<Rational> {
    if value.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let num = integer_root(value.numer(), k)?;
    let den = integer_root(value.denom(), k)?;
    Some(Rational::new(num, den))
}

fn integer_root(value: &BigInt, k: u32) -> Option<BigInt> {
    let root = value.abs().nth_root(k);
    if num_traits::pow(root.clone(), k as usize) != value.abs() {
        return None;
    }
    Some(if value.sign() == Sign::Minus { -root } else { root })
}
