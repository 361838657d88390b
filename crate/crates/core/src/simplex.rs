//! Simplices with rational vertices and their volume under the integral
//! Lebesgue measure of the affine hull.
//!
//! On a `d`-dimensional rational affine subspace the measure is normalized
//! so that a fundamental domain of the intersected lattice has volume 1. A
//! full-dimensional simplex therefore has volume `|det|/n!`; a
//! lower-dimensional one is measured in coordinates of an integral basis of
//! `lin(Δ) ∩ Z^n`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::lattice::{self, clear_row_denominators};
use crate::polynomial::LinearForm;

pub type Point = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    ambient_dimension: usize,
    vertices: Vec<Point>,
    volume: Rational,
}

impl Simplex {
    /// Validate the vertices and compute the volume once.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::InvalidSimplex("no vertices".into()));
        };
        let n = first.len();
        if n == 0 {
            return Err(Error::InvalidSimplex("ambient dimension must be positive".into()));
        }
        if let Some(bad) = vertices.iter().find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        if vertices.len() > n + 1 {
            return Err(Error::DegenerateSimplex);
        }
        let volume = compute_volume(&vertices, n)?;
        Ok(Simplex {
            ambient_dimension: n,
            vertices,
            volume,
        })
    }

    pub fn from_integers(vertices: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            vertices
                .iter()
                .map(|v| v.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    /// Parse the vertex JSON form `[["0","0"],["1","0"],["0","1"]]`. Plain
    /// JSON integers are accepted as well.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<Vec<RationalJson>> = serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let vertices = raw
            .into_iter()
            .map(|v| v.into_iter().map(RationalJson::into_rational).collect())
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices)
    }

    pub fn to_json(&self) -> String {
        let raw: Vec<Vec<String>> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(format_rational).collect())
            .collect();
        serde_json::to_string(&raw).expect("vertex list serializes")
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ambient_dimension
    }

    /// `d`, one less than the vertex count.
    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == self.ambient_dimension
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// `vol(Δ, dm)`.
    pub fn volume(&self) -> &Rational {
        &self.volume
    }

    /// `d! · vol(Δ, dm)`, the factor every integration formula carries.
    pub fn normalized_volume(&self) -> Rational {
        &self.volume * Rational::from_integer(factorial(self.dimension() as u32))
    }

    /// `(⟨ℓ,s_1⟩, …, ⟨ℓ,s_{d+1}⟩)`.
    pub fn vertex_values(&self, form: &LinearForm) -> Result<Vec<Rational>> {
        self.vertices.iter().map(|v| form.evaluate(v)).collect()
    }

    /// An integral basis of `lin(Δ) ∩ Z^n` together with the coordinates of
    /// every vertex relative to the last one. Coordinates of the last vertex
    /// are zero. The map `u ↦ s_{d+1} + B u` carries the integral measure of
    /// `aff(Δ)` onto Lebesgue measure on `R^d`.
    pub fn lattice_chart(&self) -> LatticeChart {
        let d = self.dimension();
        let n = self.ambient_dimension;
        let base = self.vertices[d].clone();
        if d == 0 {
            return LatticeChart {
                basis: Vec::new(),
                origin: base,
                coordinates: vec![Vec::new()],
            };
        }
        let diffs = difference_rows(&self.vertices);
        let (ints, _) = clear_row_denominators(&diffs);
        let basis = if d == n {
            (0..n)
                .map(|i| (0..n).map(|j| BigInt::from((i == j) as u8)).collect())
                .collect()
        } else {
            lattice::saturated_basis(&ints, n)
        };
        let mut coordinates: Vec<Vec<Rational>> = diffs
            .iter()
            .map(|v| lattice::coordinates_in_basis(&basis, v).expect("difference lies in lin(Δ)"))
            .collect();
        coordinates.push(vec![Rational::zero(); d]);
        LatticeChart {
            basis,
            origin: base,
            coordinates,
        }
    }

    /// The image under `x ↦ U x + t`; `matrix` is `n × n` in row form.
    pub fn transformed(&self, matrix: &[Vec<Rational>], translation: &[Rational]) -> Result<Simplex> {
        let verts = self
            .vertices
            .iter()
            .map(|v| {
                matrix
                    .iter()
                    .zip(translation)
                    .map(|(row, t)| row.iter().zip(v).map(|(a, b)| a * b).sum::<Rational>() + t)
                    .collect()
            })
            .collect();
        Simplex::new(verts)
    }
}

/// Coordinates of a simplex in an integral basis of its linear hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeChart {
    /// `d` basis vectors of length `n`.
    pub basis: Vec<Vec<BigInt>>,
    pub origin: Point,
    /// One coordinate vector in `Q^d` per vertex.
    pub coordinates: Vec<Vec<Rational>>,
}

impl LatticeChart {
    /// Row-form `n × d` matrix of the chart map.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.origin.len();
        (0..n)
            .map(|i| {
                self.basis
                    .iter()
                    .map(|b| Rational::from_integer(b[i].clone()))
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub(crate) enum RationalJson {
    Text(String),
    Int(i64),
}

impl RationalJson {
    pub(crate) fn into_rational(self) -> Result<Rational> {
        match self {
            RationalJson::Text(s) => parse_rational(&s),
            RationalJson::Int(i) => Ok(Rational::from_integer(BigInt::from(i))),
        }
    }
}

/// Vertex coordinates in JSON form: strings `"p/q"` or integers.
pub fn parse_point_list(text: &str) -> Result<Vec<Point>> {
    let raw: Vec<Vec<RationalJson>> = serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    raw.into_iter()
        .map(|v| v.into_iter().map(RationalJson::into_rational).collect())
        .collect()
}

/// Rows `s_i - s_{d+1}` for `i = 1..d`.
fn difference_rows(vertices: &[Point]) -> Vec<Vec<Rational>> {
    let last = vertices.last().expect("nonempty");
    vertices[..vertices.len() - 1]
        .iter()
        .map(|v| v.iter().zip(last).map(|(a, b)| a - b).collect())
        .collect()
}

fn compute_volume(vertices: &[Point], n: usize) -> Result<Rational> {
    let d = vertices.len() - 1;
    if d == 0 {
        // a point carries the counting measure
        return Ok(Rational::one());
    }
    let diffs = difference_rows(vertices);
    let (ints, scale) = clear_row_denominators(&diffs);
    let det = if d == n {
        Rational::new(lattice::bareiss_determinant(&ints), scale)
    } else {
        if lattice::integer_rank(&ints, n) < d {
            return Err(Error::DegenerateSimplex);
        }
        let basis = lattice::saturated_basis(&ints, n);
        let coords: Vec<Vec<Rational>> = diffs
            .iter()
            .map(|v| lattice::coordinates_in_basis(&basis, v).expect("difference lies in lin(Δ)"))
            .collect();
        lattice::rational_determinant(&coords)
    };
    if det.is_zero() {
        return Err(Error::DegenerateSimplex);
    }
    Ok(det.abs() / Rational::from_integer(factorial(d as u32)))
}

/// `conv(e_1, …, e_n)` in `Q^n`.
pub fn canonical_simplex(n: usize) -> Simplex {
    assert!(n >= 1);
    let verts = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    Simplex::new(verts).expect("canonical simplex is nondegenerate")
}

/// One distinct vertex value of a linear form with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pole {
    pub value: Rational,
    /// Index of the first vertex attaining `value`.
    pub representative: usize,
    pub multiplicity: usize,
}

/// Group equal vertex values; poles appear in order of first occurrence.
pub fn pole_structure(values: &[Rational]) -> Vec<Pole> {
    let mut poles: Vec<Pole> = Vec::new();
    for (i, v) in values.iter().enumerate() {
        match poles.iter_mut().find(|p| &p.value == v) {
            Some(p) => p.multiplicity += 1,
            None => poles.push(Pole {
                value: v.clone(),
                representative: i,
                multiplicity: 1,
            }),
        }
    }
    poles
}
