//! Clique numbers from integrals of powers of the Motzkin–Straus form
//! `Q_G = ½ Σ_{ij ∈ E} x_i x_j` over the canonical simplex.
//!
//! Integrals here use the probability normalization of the simplex (total
//! mass 1), unlike the lattice measure used elsewhere in the crate.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, compositions, factorial, rat, Rational};
use crate::error::{Error, Result};
use crate::polynomial::SparsePolynomial;

/// Default bound on multinomial terms in one expansion of `Q_G^p`.
pub const DEFAULT_EXPANSION_LIMIT: u64 = 1_000_000;

/// Largest vertex count accepted by [`brute_force_clique`].
pub const BRUTE_FORCE_MAX_VERTICES: usize = 20;

/// Simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// Edges `(i, j)` with `i < j`, 1-based.
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Deserialize, Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            for v in [a, b] {
                if v == 0 || v > vertex_count {
                    return Err(Error::InvalidGraph(format!("vertex {v} outside 1..={vertex_count}")));
                }
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a},{b})")));
            }
        }
        Ok(Graph {
            vertex_count,
            edges: set,
        })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, [])
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph("a cycle needs at least 3 vertices".into()));
        }
        Graph::new(n, (1..=n).map(|i| (i, i % n + 1)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (i, i + 1)))
    }

    /// Every labelled graph on `n` vertices.
    pub fn all_on(n: usize) -> Result<Vec<Graph>> {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        if pairs.len() >= 32 {
            return Err(Error::InvalidGraph(format!("too many graphs on {n} vertices")));
        }
        (0u32..(1 << pairs.len()))
            .map(|mask| {
                Graph::new(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, &e)| e),
                )
            })
            .collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::InvalidGraph(e.to_string()))?;
        Graph::new(raw.n, raw.edges.into_iter().map(|[a, b]| (a, b)))
    }

    pub fn to_json(&self) -> String {
        let raw = GraphJson {
            n: self.vertex_count,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&raw).expect("graph serializes")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }
}

/// `½ Σ_{ij ∈ E} x_i x_j` in `n` variables.
pub fn motzkin_straus_form(graph: &Graph) -> SparsePolynomial {
    let n = graph.vertex_count();
    let mut q = SparsePolynomial::zero(n);
    for (a, b) in graph.edges() {
        let mut e = vec![0; n];
        e[a - 1] = 1;
        e[b - 1] = 1;
        q.add_term(e, rat(1, 2));
    }
    q
}

/// Number of multinomial terms in `Q_G^p`: `C(p+|E|-1, |E|-1)`.
pub fn expansion_term_count(graph: &Graph, p: u32) -> BigInt {
    let e = graph.edge_count() as u32;
    if e == 0 {
        return BigInt::zero();
    }
    binomial(p + e - 1, e - 1)
}

/// `∫_Δ Q_G^p` over the canonical simplex with total mass 1.
pub fn integrate_form_power(graph: &Graph, p: u32, limit: u64) -> Result<Rational> {
    let edges: Vec<(usize, usize)> = graph.edges().collect();
    if edges.is_empty() {
        return Ok(if p == 0 { Rational::one() } else { Rational::zero() });
    }
    let count = expansion_term_count(graph, p);
    if count > BigInt::from(limit) {
        return Err(Error::ExpansionLimitExceeded {
            count: count.to_string(),
            limit,
        });
    }
    let n = graph.vertex_count();
    let facts: Vec<BigInt> = (0..=2 * p).map(factorial).collect();
    let mut exps = vec![0usize; n];
    let mut sum = BigInt::zero();
    for k in compositions(p, edges.len()) {
        exps.iter_mut().for_each(|x| *x = 0);
        let mut denom = BigInt::one();
        for (&(a, b), &ke) in edges.iter().zip(k.parts()) {
            if ke > 0 {
                exps[a - 1] += ke as usize;
                exps[b - 1] += ke as usize;
                denom *= &facts[ke as usize];
            }
        }
        let mut numer = facts[p as usize].clone();
        for &m in &exps {
            if m > 1 {
                numer *= &facts[m];
            }
        }
        sum += numer / denom;
    }
    // Dirichlet moments with the (n-1)! mass normalization
    let d = n as u32 - 1;
    let scale = Rational::new(
        factorial(d),
        factorial(2 * p + d) * num_traits::pow(BigInt::from(2), p as usize),
    );
    Ok(Rational::from_integer(sum) * scale)
}

/// Least `K ≥ 1` with `∫ Q_G^p ≤ ((K-1)/(4K))^p`, the exact form of
/// `⌈1/(1 - 4‖Q_G‖_p)⌉`. Since `max_Δ Q_G = (1 - 1/ω)/4`, this never
/// exceeds `ω(G)` and reaches it for large `p`.
pub fn clique_estimate(graph: &Graph, p: u32, limit: u64) -> Result<u32> {
    if p == 0 {
        return Err(Error::InvalidInput("p must be positive".into()));
    }
    let r = integrate_form_power(graph, p, limit)?;
    estimate_from_integral(&r, p, graph.vertex_count() as u32)
}

fn estimate_from_integral(r: &Rational, p: u32, n: u32) -> Result<u32> {
    for k in 1..=n.max(1) {
        let bound = crate::arith::pow(&rat(k as i64 - 1, 4 * k as i64), p);
        if *r <= bound {
            return Ok(k);
        }
    }
    Err(Error::InvalidInput(format!(
        "integral exceeds the bound for every clique size up to {n}"
    )))
}

/// A certified integer upper bound of `4(e-1) n³ ln(32 n²)`.
pub fn recommended_p(n: u32) -> BigInt {
    let n_big = BigInt::from(n.max(1));
    let y = Rational::from_integer(BigInt::from(32) * &n_big * &n_big);
    let bound = rat(4 * 43, 25) * Rational::from_integer(num_traits::pow(n_big, 3)) * ln_upper_bound(&y);
    crate::arith::ceil(&bound)
}

/// Rational `u ≥ ln y` for `y ≥ 1`, within about `1e-15` of it.
pub fn ln_upper_bound(y: &Rational) -> Rational {
    assert!(*y >= Rational::one(), "ln bound needs y ≥ 1");
    // y = 2^k t with 1 ≤ t < 2
    let two = rat(2, 1);
    let mut t = y.clone();
    let mut k = 0u32;
    while t >= two {
        t /= &two;
        k += 1;
    }
    Rational::from_integer(BigInt::from(k)) * atanh_log_upper(&two) + atanh_log_upper(&t)
}

/// `ln t = 2 Σ_j z^{2j+1}/(2j+1)` with `z = (t-1)/(t+1) ≤ 1/3`; the tail after
/// `J` terms is at most `2 z^{2J+1} / ((2J+1)(1-z²))`.
fn atanh_log_upper(t: &Rational) -> Rational {
    let one = Rational::one();
    let z = (t - &one) / (t + &one);
    if z.is_zero() {
        return Rational::zero();
    }
    let z2 = &z * &z;
    let mut power = z.clone();
    let mut sum = Rational::zero();
    let mut j = 0u32;
    let tolerance = rat(1, 1_000_000_000_000_000);
    loop {
        sum += &power / Rational::from_integer(BigInt::from(2 * j + 1));
        power *= &z2;
        j += 1;
        let tail = &power / (Rational::from_integer(BigInt::from(2 * j + 1)) * (&one - &z2));
        if tail < tolerance {
            return (sum + tail) * rat(2, 1);
        }
    }
}

/// Exhaustive clique number for at most [`BRUTE_FORCE_MAX_VERTICES`]
/// vertices.
pub fn brute_force_clique(graph: &Graph) -> Result<u32> {
    let n = graph.vertex_count();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::InvalidInput(format!(
            "brute force is limited to {BRUTE_FORCE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let adjacency: Vec<u32> = (1..=n)
        .map(|a| {
            (1..=n)
                .filter(|&b| graph.has_edge(a, b))
                .fold(0u32, |m, b| m | 1 << (b - 1))
        })
        .collect();
    let mut best = 1;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones();
        if size <= best {
            continue;
        }
        let is_clique = (0..n).all(|v| mask >> v & 1 == 0 || (adjacency[v] | 1 << v) & mask == mask);
        if is_clique {
            best = size;
        }
    }
    Ok(best)
}

/// `max Q_G` over the uniform points of cliques, `x_i = 1/|S|` for `i ∈ S`.
pub fn max_over_clique_points(graph: &Graph) -> Result<Rational> {
    let n = graph.vertex_count();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::InvalidInput("too many vertices".into()));
    }
    let q = motzkin_straus_form(graph);
    let mut best = Rational::zero();
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let is_clique = members
            .iter()
            .all(|&a| members.iter().all(|&b| a == b || graph.has_edge(a + 1, b + 1)));
        if !is_clique {
            continue;
        }
        let share = rat(1, members.len() as i64);
        let point: Vec<Rational> = (0..n)
            .map(|v| {
                if mask >> v & 1 == 1 {
                    share.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let value = q.evaluate(&point)?;
        if value > best {
            best = value;
        }
    }
    Ok(best)
}

/// One step of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepStep {
    pub p: u32,
    pub estimate: u32,
    pub terms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub steps: Vec<SweepStep>,
    pub brute_force: u32,
    /// Smallest `p` at which the estimate equals the clique number.
    pub matched_at: Option<u32>,
    /// The expansion limit stopped the sweep before `max_p`.
    pub hit_limit: bool,
}

impl SweepReport {
    pub fn final_estimate(&self) -> Option<u32> {
        self.steps.last().map(|s| s.estimate)
    }
}

/// Raise `p = 1, 2, …, max_p` until the estimate reaches `ω(G)` or the
/// expansion limit is exceeded.
pub fn sweep(graph: &Graph, max_p: u32, limit: u64) -> Result<SweepReport> {
    let omega = brute_force_clique(graph)?;
    let mut report = SweepReport {
        steps: Vec::new(),
        brute_force: omega,
        matched_at: None,
        hit_limit: false,
    };
    for p in 1..=max_p {
        let terms = expansion_term_count(graph, p);
        let estimate = match clique_estimate(graph, p, limit) {
            Ok(k) => k,
            Err(Error::ExpansionLimitExceeded { .. }) => {
                report.hit_limit = true;
                break;
            }
            Err(e) => return Err(e),
        };
        report.steps.push(SweepStep {
            p,
            estimate,
            terms: terms.to_u64().unwrap_or(u64::MAX),
        });
        if estimate == omega {
            report.matched_at = Some(p);
            break;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::integrate::integrate_monomial_canonical;

    fn k3() -> Graph {
        Graph::complete(3).unwrap()
    }

    #[test]
    fn forms() {
        let q = motzkin_straus_form(&k3());
        assert_eq!(q.term_count(), 3);
        assert_eq!(q.coefficient(&[1, 1, 0]), rat(1, 2));
        assert!(motzkin_straus_form(&Graph::empty(3).unwrap()).is_zero());
        let e = Graph::new(2, [(1, 2)]).unwrap();
        assert_eq!(motzkin_straus_form(&e).coefficient(&[1, 1]), rat(1, 2));
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(2, [(1, 1)]).is_err());
        assert!(Graph::new(2, [(1, 3)]).is_err());
        assert!(Graph::new(2, [(1, 2), (2, 1)]).is_err());
        let g = Graph::from_json(r#"{"n": 4, "edges": [[1,2],[2,3]]}"#).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        assert_eq!(Graph::all_on(3).unwrap().len(), 8);
    }

    #[test]
    fn form_power_values() {
        assert_eq!(
            integrate_form_power(&k3(), 1, DEFAULT_EXPANSION_LIMIT).unwrap(),
            rat(1, 8)
        );
        assert_eq!(integrate_form_power(&Graph::empty(4).unwrap(), 3, 10).unwrap(), int(0));
        let e = Graph::new(2, [(1, 2)]).unwrap();
        assert_eq!(integrate_form_power(&e, 1, 10).unwrap(), rat(1, 12));
        assert!(matches!(
            integrate_form_power(&Graph::complete(4).unwrap(), 30, 100),
            Err(Error::ExpansionLimitExceeded { limit: 100, .. })
        ));
    }

    #[test]
    fn form_power_matches_expanded_polynomial() {
        // expand Q^p directly and integrate monomial by monomial
        for g in [k3(), Graph::cycle(4).unwrap(), Graph::path(4).unwrap()] {
            let n = g.vertex_count();
            let mass = Rational::from_integer(factorial(n as u32 - 1));
            for p in 1..=4 {
                let expanded = motzkin_straus_form(&g).pow(p);
                let direct: Rational = expanded
                    .terms()
                    .map(|(e, c)| c * integrate_monomial_canonical(e))
                    .sum::<Rational>()
                    * &mass;
                assert_eq!(integrate_form_power(&g, p, DEFAULT_EXPANSION_LIMIT).unwrap(), direct);
            }
        }
    }

    #[test]
    fn estimates() {
        assert_eq!(clique_estimate(&Graph::empty(3).unwrap(), 1, 10).unwrap(), 1);
        let e = Graph::new(2, [(1, 2)]).unwrap();
        assert_eq!(clique_estimate(&e, 1, 10).unwrap(), 2);
        assert_eq!(clique_estimate(&k3(), 1, 10).unwrap(), 2);
    }

    #[test]
    fn brute_force() {
        assert_eq!(brute_force_clique(&k3()).unwrap(), 3);
        assert_eq!(brute_force_clique(&Graph::empty(4).unwrap()).unwrap(), 1);
        assert_eq!(brute_force_clique(&Graph::cycle(5).unwrap()).unwrap(), 2);
        assert_eq!(brute_force_clique(&Graph::complete(6).unwrap()).unwrap(), 6);
    }

    #[test]
    fn uniform_clique_points_attain_quarter_bound() {
        for n in 1..=4 {
            for g in Graph::all_on(n).unwrap() {
                let omega = brute_force_clique(&g).unwrap() as i64;
                assert_eq!(max_over_clique_points(&g).unwrap(), rat(omega - 1, 4 * omega));
            }
        }
    }

    #[test]
    fn recommended_p_values() {
        // 4(e-1)·27·ln 288 ≈ 1051.1 and 4(e-1)·ln 32 ≈ 23.82
        let p3 = recommended_p(3);
        assert!(p3 >= BigInt::from(1052) && p3 <= BigInt::from(1104), "{p3}");
        let p1 = recommended_p(1);
        assert!(p1 >= BigInt::from(24) && p1 <= BigInt::from(25), "{p1}");
        for n in 1..30 {
            assert!(recommended_p(n + 1) > recommended_p(n));
        }
    }

    #[test]
    fn ln_bound_is_tight_and_above() {
        for y in [1i64, 2, 3, 10, 288, 1_000_000] {
            let u = ln_upper_bound(&int(y));
            let approx = u.numer().to_f64().unwrap() / u.denom().to_f64().unwrap();
            let exact = (y as f64).ln();
            assert!(
                approx >= exact - 1e-12 && approx - exact < 1e-9,
                "{y}: {approx} vs {exact}"
            );
        }
    }

    #[test]
    fn small_sweeps() {
        let r = sweep(&k3(), 100, DEFAULT_EXPANSION_LIMIT).unwrap();
        assert_eq!(r.brute_force, 3);
        assert!(r.matched_at.is_some_and(|p| p <= 100));
        let r = sweep(&Graph::path(3).unwrap(), 100, DEFAULT_EXPANSION_LIMIT).unwrap();
        assert_eq!(r.matched_at.map(|_| r.final_estimate()), Some(Some(2)));
        let r = sweep(&Graph::empty(3).unwrap(), 5, 10).unwrap();
        assert_eq!(r.matched_at, Some(1));
    }
}
