//! Seeded random instances: integer simplices and polynomials.
//!
//! All draws come from ChaCha8 seeded with a 64-bit value, so instances are
//! reproducible across platforms and releases of this crate.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{binomial, Rational};
use crate::error::{Error, Result};
use crate::integrate::{MethodChoice, PolynomialInput};
use crate::polynomial::{Exponents, SparsePolynomial};
use crate::request::IntegrationRequest;
use crate::simplex::Simplex;

pub const DEFAULT_VERTEX_BOX: i64 = 10;

/// Coefficients are drawn from `1..=MAX_COEFFICIENT`.
pub const MAX_COEFFICIENT: i64 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// One monomial of degree exactly `M`.
    Monomial,
    /// `C(M+n-1, n-1)` draws of degree-`M` monomials, colliding draws merged.
    DenseHomogeneous,
    /// One monomial of degree `M` in the first `D` variables.
    FewEffective(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Monomial => write!(f, "monomial"),
            Generator::DenseHomogeneous => write!(f, "dense-homogeneous"),
            Generator::FewEffective(d) => write!(f, "few-effective:{d}"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    /// `monomial`, `dense-homogeneous`, `few-effective:D` or
    /// `few-effective(D)`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monomial" => return Ok(Generator::Monomial),
            "dense-homogeneous" | "dense" => return Ok(Generator::DenseHomogeneous),
            _ => {}
        }
        let arg = s
            .strip_prefix("few-effective:")
            .or_else(|| s.strip_prefix("few-effective(").and_then(|r| r.strip_suffix(')')));
        match arg.map(str::parse::<usize>) {
            Some(Ok(d)) if d >= 1 => Ok(Generator::FewEffective(d)),
            _ => Err(Error::InvalidInput(format!("unknown generator `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceParams {
    pub dimension: usize,
    pub degree: u32,
    pub generator: Generator,
    /// Vertex coordinates are drawn from `-vertex_box..=vertex_box`.
    pub vertex_box: i64,
    pub seed: u64,
}

impl InstanceParams {
    pub fn new(dimension: usize, degree: u32, generator: Generator, seed: u64) -> Self {
        InstanceParams {
            dimension,
            degree,
            generator,
            vertex_box: DEFAULT_VERTEX_BOX,
            seed,
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A full-dimensional simplex with integer vertices in the box, redrawn
/// until affinely independent.
pub fn random_simplex<R: Rng>(rng: &mut R, n: usize, vertex_box: i64) -> Simplex {
    random_lower_dimensional_simplex(rng, n, n, vertex_box)
}

/// A `d`-dimensional simplex in `Q^n`.
pub fn random_lower_dimensional_simplex<R: Rng>(rng: &mut R, n: usize, d: usize, vertex_box: i64) -> Simplex {
    assert!(n >= 1 && d <= n && vertex_box >= 1);
    loop {
        let verts: Vec<Vec<i64>> = (0..=d)
            .map(|_| (0..n).map(|_| rng.gen_range(-vertex_box..=vertex_box)).collect())
            .collect();
        if let Ok(s) = Simplex::from_integers(&verts) {
            return s;
        }
    }
}

/// Uniform element of `{e ∈ N^n : |e| = degree}` by stars and bars.
pub fn random_exponents<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Exponents {
    assert!(n >= 1);
    let slots = degree as usize + n - 1;
    let mut bars = index::sample(rng, slots, n - 1).into_vec();
    bars.sort_unstable();
    let mut out = Vec::with_capacity(n);
    let mut prev = 0usize;
    for (k, &b) in bars.iter().enumerate() {
        // stars between consecutive bars
        out.push((b - prev - if k == 0 { 0 } else { 1 }) as u32);
        prev = b;
    }
    let used: u32 = out.iter().sum();
    out.push(degree - used);
    out
}

fn random_coefficient<R: Rng>(rng: &mut R) -> Rational {
    Rational::from_integer(BigInt::from(rng.gen_range(1..=MAX_COEFFICIENT)))
}

pub fn random_polynomial<R: Rng>(rng: &mut R, n: usize, degree: u32, generator: Generator) -> SparsePolynomial {
    let mut f = SparsePolynomial::zero(n);
    match generator {
        Generator::Monomial => {
            let e = random_exponents(rng, n, degree);
            f.add_term(e, random_coefficient(rng));
        }
        Generator::DenseHomogeneous => {
            let draws = dense_draw_count(n, degree);
            for _ in 0..draws {
                let e = random_exponents(rng, n, degree);
                f.add_term(e, random_coefficient(rng));
            }
        }
        Generator::FewEffective(d) => {
            let d = d.min(n);
            let mut e = random_exponents(rng, d, degree);
            e.resize(n, 0);
            f.add_term(e, random_coefficient(rng));
        }
    }
    f
}

/// `C(M+n-1, n-1)`, the number of monomials of degree `M` in `n` variables.
pub fn dense_draw_count(n: usize, degree: u32) -> u64 {
    binomial(degree + n as u32 - 1, n as u32 - 1)
        .to_u64()
        .expect("draw count fits in u64")
}

pub fn random_instance(params: &InstanceParams) -> IntegrationRequest {
    let mut rng = rng_from_seed(params.seed);
    let simplex = random_simplex(&mut rng, params.dimension, params.vertex_box);
    let f = random_polynomial(&mut rng, params.dimension, params.degree, params.generator);
    IntegrationRequest {
        vertices: simplex.vertices().to_vec(),
        polynomial: PolynomialInput::Sparse(f),
        method: MethodChoice::Auto,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::total_degree;
    use std::collections::HashMap;

    #[test]
    fn deterministic_for_a_seed() {
        let p = InstanceParams::new(3, 5, Generator::Monomial, 42);
        assert_eq!(random_instance(&p), random_instance(&p));
        assert_eq!(random_instance(&p).to_json(), random_instance(&p).to_json());
        let q = InstanceParams { seed: 43, ..p.clone() };
        assert_ne!(random_instance(&p), random_instance(&q));
    }

    #[test]
    fn generators_respect_shape() {
        let mut rng = rng_from_seed(7);
        for _ in 0..20 {
            let f = random_polynomial(&mut rng, 4, 6, Generator::DenseHomogeneous);
            assert!(f.term_count() as u64 <= dense_draw_count(4, 6));
            assert_eq!(f.homogeneous_degree(), Some(6));
            let g = random_polynomial(&mut rng, 5, 7, Generator::FewEffective(2));
            for (e, c) in g.terms() {
                assert!(e[2..].iter().all(|&x| x == 0));
                assert_eq!(total_degree(e), 7);
                assert!(*c >= Rational::from_integer(1.into()));
            }
        }
    }

    #[test]
    fn exponents_are_uniform() {
        // 3 variables, degree 2: six outcomes
        let mut rng = rng_from_seed(1);
        let mut counts: HashMap<Exponents, u32> = HashMap::new();
        for _ in 0..6000 {
            *counts.entry(random_exponents(&mut rng, 3, 2)).or_default() += 1;
        }
        assert_eq!(counts.len(), 6);
        for &c in counts.values() {
            assert!((800..1200).contains(&c), "{counts:?}");
        }
    }

    #[test]
    fn simplices_are_in_the_box() {
        let mut rng = rng_from_seed(3);
        let s = random_simplex(&mut rng, 4, 2);
        assert!(s.is_full_dimensional());
        for v in s.vertices() {
            for x in v {
                assert!(crate::arith::abs(x) <= Rational::from_integer(2.into()));
            }
        }
        let t = random_lower_dimensional_simplex(&mut rng, 5, 2, 9);
        assert_eq!(t.dimension(), 2);
    }

    #[test]
    fn generator_names() {
        for g in [
            Generator::Monomial,
            Generator::DenseHomogeneous,
            Generator::FewEffective(3),
        ] {
            assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
        }
        assert_eq!(
            "few-effective(2)".parse::<Generator>().unwrap(),
            Generator::FewEffective(2)
        );
        assert!("few-effective:0".parse::<Generator>().is_err());
    }
}
