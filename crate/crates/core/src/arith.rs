//! Exact rational scalars and the small combinatorial helpers the integration
//! formulas are assembled from.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Build a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Build an integral rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parse the wire form `p/q` or `p` (sign on the numerator, surrounding
/// whitespace ignored).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let numer: BigInt = parse_integer(num).ok_or_else(|| Error::InvalidRational(text.into()))?;
    let denom = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with(['-', '+']) {
                return Err(Error::InvalidRational(text.into()));
            }
            parse_integer(d).ok_or_else(|| Error::InvalidRational(text.into()))?
        }
    };
    if denom.is_zero() {
        return Err(Error::ZeroDenominator(text.into()));
    }
    Ok(Rational::new(numer, denom))
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Render in the wire form: `p/q`, or `p` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// `base^exp` by repeated squaring; `0^0 = 1`.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

pub fn factorial(m: u32) -> BigInt {
    (2..=m).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(a, b)`, zero when `b > a`.
pub fn binomial(a: u32, b: u32) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient `(Σ parts)! / Π parts_i!`.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let mut total = 0;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Möbius function by trial division.
pub fn moebius(d: u64) -> i8 {
    assert!(d >= 1, "moebius is defined for positive integers");
    let mut n = d;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Least common multiple of the denominators of `values` (one for an empty
/// slice).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Smallest integer `>= value`.
pub fn ceil(value: &Rational) -> BigInt {
    value.ceil().to_integer()
}

pub fn abs(value: &Rational) -> Rational {
    value.abs()
}

/// A weak composition `k = (k_1, …, k_m)` of `total` into `m` parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
    total: u32,
}

impl Composition {
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }
}

/// Lazily enumerate every weak composition of `total` into `parts` parts in
/// lexicographic order. With zero parts only the empty composition of 0
/// exists.
pub fn compositions(total: u32, parts: usize) -> Compositions {
    if parts == 0 {
        return Compositions {
            next: (total == 0).then(Vec::new),
            total,
        };
    }
    let mut first = vec![0; parts];
    first[parts - 1] = total;
    Compositions {
        next: Some(first),
        total,
    }
}

/// Iterator returned by [`compositions`].
#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Vec<u32>>,
    total: u32,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        if current.is_empty() {
            return Some(Composition {
                parts: current,
                total: self.total,
            });
        }
        let last = current.len() - 1;
        let mut succ = current.clone();
        // Rightmost position (before the last) that still has mass after it.
        let mut tail = succ[last];
        let mut i = last;
        while i > 0 {
            i -= 1;
            if tail > 0 {
                succ[i] += 1;
                for slot in &mut succ[i + 1..last] {
                    *slot = 0;
                }
                succ[last] = tail - 1;
                self.next = Some(succ);
                break;
            }
            tail += succ[i];
        }
        Some(Composition {
            parts: current,
            total: self.total,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        // iterated multiplication in u64 as the oracle
        let oracle: u64 = (1..=20u64).product();
        assert_eq!(oracle, 2_432_902_008_176_640_000);
        assert_eq!(factorial(20), BigInt::from(oracle));
    }

    fn pascal(a: usize, b: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 0..a {
            let mut next = vec![1u64; row.len() + 1];
            for j in 1..row.len() {
                next[j] = row[j - 1] + row[j];
            }
            row = next;
        }
        row.get(b).copied().unwrap_or(0)
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(pascal(8, 3), 56);
        assert_eq!(binomial(3 + 5, 3), BigInt::from(56));
        for a in 0..30 {
            for b in 0..=a + 2 {
                assert_eq!(binomial(a as u32, b as u32), BigInt::from(pascal(a, b)));
            }
        }
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(2), -1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(12), 0);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(49), 0);
    }

    /// G(n,M) = Σ_{d=1}^{M} F(n, ⌊M/d⌋) where F is obtained by Möbius
    /// inversion; checking that the inversion reconstructs G exercises
    /// `moebius` and `binomial` together.
    #[test]
    fn moebius_inversion_reconstructs_g() {
        let g = |n: u32, m: u32| binomial(n + m, n) - 1;
        let f = |n: u32, m: u32| -> BigInt { (1..=m).map(|d| BigInt::from(moebius(d as u64)) * g(n, m / d)).sum() };
        for n in 1..=10 {
            for m in 1..=10 {
                let rebuilt: BigInt = (1..=m).map(|d| f(n, m / d)).sum();
                assert_eq!(rebuilt, g(n, m), "n={n} M={m}");
            }
        }
    }

    #[test]
    fn compositions_small() {
        let got: Vec<Vec<u32>> = compositions(2, 2).map(Composition::into_parts).collect();
        assert_eq!(got, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let got: Vec<Vec<u32>> = compositions(0, 3).map(Composition::into_parts).collect();
        assert_eq!(got, vec![vec![0, 0, 0]]);
        assert_eq!(compositions(10, 4).count(), 286);
        assert_eq!(compositions(5, 1).count(), 1);
    }

    #[test]
    fn compositions_lexicographic() {
        let all: Vec<Vec<u32>> = compositions(4, 3).map(Composition::into_parts).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn rational_wire_format() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" -4 ").unwrap(), int(-4));
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(8, 4)), "2");
        assert_eq!(format_rational(&rat(0, 5)), "0");
        assert!(matches!(parse_rational("1/0"), Err(Error::ZeroDenominator(_))));
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..200).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert_eq!(&a * a.recip(), Rational::one());
            }
        }

        #[test]
        fn canonical_form(n in -10_000i64..10_000, d in 1i64..10_000) {
            let r = rat(n, d);
            prop_assert!(r.denom().is_positive());
            prop_assert!(r.numer().gcd(r.denom()).is_one());
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }

        #[test]
        fn composition_count_and_uniqueness(total in 0u32..9, parts in 1usize..5) {
            let all: Vec<_> = compositions(total, parts).collect();
            let expected = binomial(total + parts as u32 - 1, parts as u32 - 1);
            prop_assert_eq!(BigInt::from(all.len()), expected);
            let unique: HashSet<_> = all.iter().cloned().collect();
            prop_assert_eq!(unique.len(), all.len());
            for c in &all {
                prop_assert_eq!(c.parts().iter().sum::<u32>(), total);
                prop_assert_eq!(c.total(), total);
            }
        }
    }
}
