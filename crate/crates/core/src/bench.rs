//! Timing tables over grids of dimensions and degrees.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::arith::{format_rational, Rational};
use crate::error::Result;
use crate::integrate::{count_primitive_forms, integrate_sparse, IntegrationConfig, MethodChoice};
use crate::random::{random_instance, Generator, InstanceParams, DEFAULT_VERTEX_BOX};

pub const DEFAULT_TIME_LIMIT: Duration = Duration::from_secs(600);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub dimensions: Vec<usize>,
    pub degrees: Vec<u32>,
    pub instances: usize,
    pub generator: Generator,
    pub methods: Vec<MethodChoice>,
    pub seed: u64,
    pub time_limit: Duration,
    pub vertex_box: i64,
    pub integration: IntegrationConfig,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            dimensions: vec![2, 3, 4],
            degrees: vec![1, 2, 5],
            instances: 5,
            generator: Generator::Monomial,
            methods: vec![MethodChoice::Waring, MethodChoice::Duality, MethodChoice::Laurent],
            seed: 0,
            time_limit: DEFAULT_TIME_LIMIT,
            vertex_box: DEFAULT_VERTEX_BOX,
            integration: IntegrationConfig::default(),
        }
    }
}

/// Outcome of one method on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Run {
    pub dimension: usize,
    pub degree: u32,
    pub instance: usize,
    pub method: String,
    #[serde(skip)]
    pub seconds: Option<f64>,
    pub integral: Option<String>,
    pub error: Option<String>,
    pub timed_out: bool,
}

/// Timing summary of one `(n, M, method)` cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cell {
    pub dimension: usize,
    pub degree: u32,
    pub method: String,
    pub completed: usize,
    pub timeouts: usize,
    pub errors: usize,
    pub min_seconds: Option<f64>,
    pub avg_seconds: Option<f64>,
    pub max_seconds: Option<f64>,
}

/// Instances on which two methods returned different values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub dimension: usize,
    pub degree: u32,
    pub instance: usize,
    pub values: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub runs: Vec<Run>,
    pub cells: Vec<Cell>,
    pub mismatches: Vec<Mismatch>,
}

/// Seed of instance `i` in cell `(n, M)`, a splitmix64 step over the inputs.
pub fn instance_seed(seed: u64, n: usize, degree: u32, i: usize) -> u64 {
    let mut z = seed
        ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (degree as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9)
        ^ (i as u64).wrapping_mul(0x94D0_49BB_1331_11EB);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Run every method on every instance of every cell. A method that times
/// out in a cell is skipped for the larger degrees of the same dimension;
/// those instances count as timeouts.
pub fn run_bench(config: &BenchConfig) -> BenchReport {
    let mut runs = Vec::new();
    let mut mismatches = Vec::new();
    for &n in &config.dimensions {
        let mut exhausted: Vec<MethodChoice> = Vec::new();
        let mut degrees = config.degrees.clone();
        degrees.sort_unstable();
        for &degree in &degrees {
            let mut timed_out_here = Vec::new();
            for i in 0..config.instances {
                let params = InstanceParams {
                    vertex_box: config.vertex_box,
                    ..InstanceParams::new(n, degree, config.generator, instance_seed(config.seed, n, degree, i))
                };
                let request = random_instance(&params);
                let simplex = request.simplex().expect("generated simplices are valid");
                let f = request.polynomial.to_sparse(n).expect("generated polynomial matches n");
                let mut values = BTreeMap::new();
                for &method in &config.methods {
                    let mut run = Run {
                        dimension: n,
                        degree,
                        instance: i,
                        method: method.name().to_string(),
                        seconds: None,
                        integral: None,
                        error: None,
                        timed_out: false,
                    };
                    if exhausted.contains(&method) {
                        run.timed_out = true;
                        runs.push(run);
                        continue;
                    }
                    match run_with_limit(&simplex, &f, method, config) {
                        Some((Ok(value), secs)) => {
                            let text = format_rational(&value);
                            values.insert(method.name().to_string(), text.clone());
                            run.integral = Some(text);
                            run.seconds = Some(secs);
                        }
                        Some((Err(e), secs)) => {
                            run.error = Some(e.to_string());
                            run.seconds = Some(secs);
                        }
                        None => {
                            run.timed_out = true;
                            if !timed_out_here.contains(&method) {
                                timed_out_here.push(method);
                            }
                        }
                    }
                    runs.push(run);
                }
                let mut distinct: Vec<&String> = values.values().collect();
                distinct.dedup();
                distinct.sort();
                distinct.dedup();
                if distinct.len() > 1 {
                    mismatches.push(Mismatch {
                        dimension: n,
                        degree,
                        instance: i,
                        values,
                    });
                }
            }
            exhausted.extend(timed_out_here);
        }
    }
    let cells = summarize(config, &runs);
    BenchReport {
        runs,
        cells,
        mismatches,
    }
}

type Timed = (Result<Rational>, f64);

/// `None` when the time limit expires first; the worker is then left to
/// finish in the background.
fn run_with_limit(
    simplex: &crate::simplex::Simplex,
    f: &crate::polynomial::SparsePolynomial,
    method: MethodChoice,
    config: &BenchConfig,
) -> Option<Timed> {
    let (tx, rx) = mpsc::channel();
    let simplex = simplex.clone();
    let f = f.clone();
    let integration = config.integration;
    thread::spawn(move || {
        let start = Instant::now();
        let out = integrate_sparse(&simplex, &f, method, &integration).map(|(v, _)| v);
        let _ = tx.send((out, start.elapsed().as_secs_f64()));
    });
    rx.recv_timeout(config.time_limit).ok()
}

fn summarize(config: &BenchConfig, runs: &[Run]) -> Vec<Cell> {
    let mut cells = Vec::new();
    for &n in &config.dimensions {
        for &degree in &config.degrees {
            for method in &config.methods {
                let name = method.name();
                let here: Vec<&Run> = runs
                    .iter()
                    .filter(|r| r.dimension == n && r.degree == degree && r.method == name)
                    .collect();
                let times: Vec<f64> = here
                    .iter()
                    .filter(|r| r.integral.is_some())
                    .filter_map(|r| r.seconds)
                    .collect();
                let (min, avg, max) = if times.is_empty() {
                    (None, None, None)
                } else {
                    let min = times.iter().cloned().fold(f64::INFINITY, f64::min);
                    let max = times.iter().cloned().fold(0.0, f64::max);
                    let avg = times.iter().sum::<f64>() / times.len() as f64;
                    (Some(min), Some(avg.clamp(min, max)), Some(max))
                };
                cells.push(Cell {
                    dimension: n,
                    degree,
                    method: name.to_string(),
                    completed: times.len(),
                    timeouts: here.iter().filter(|r| r.timed_out).count(),
                    errors: here.iter().filter(|r| r.error.is_some()).count(),
                    min_seconds: min,
                    avg_seconds: avg,
                    max_seconds: max,
                });
            }
        }
    }
    cells
}

impl BenchReport {
    /// One table per method: header `method,n,<degrees…>`, one row per
    /// dimension, cells `min/avg/max` in seconds at 0.1 s resolution. Cells
    /// without a completed instance are empty.
    pub fn to_csv(&self, config: &BenchConfig) -> String {
        let mut out = String::new();
        let _ = write!(out, "method,n");
        for m in &config.degrees {
            let _ = write!(out, ",{m}");
        }
        out.push('\n');
        for method in &config.methods {
            for &n in &config.dimensions {
                let _ = write!(out, "{},{}", method.name(), n);
                for &degree in &config.degrees {
                    out.push(',');
                    let cell = self
                        .cells
                        .iter()
                        .find(|c| c.dimension == n && c.degree == degree && c.method == method.name());
                    if let Some(Cell {
                        min_seconds: Some(a),
                        avg_seconds: Some(b),
                        max_seconds: Some(c),
                        ..
                    }) = cell
                    {
                        let _ = write!(out, "{a:.1}/{b:.1}/{c:.1}");
                    }
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn to_json(&self, config: &BenchConfig) -> String {
        #[derive(Serialize)]
        struct Summary<'a> {
            generator: String,
            seed: u64,
            instances: usize,
            time_limit_seconds: f64,
            dimensions: &'a [usize],
            degrees: &'a [u32],
            methods: Vec<&'a str>,
            cells: &'a [Cell],
            runs: &'a [Run],
            mismatches: &'a [Mismatch],
        }
        serde_json::to_string_pretty(&Summary {
            generator: config.generator.to_string(),
            seed: config.seed,
            instances: config.instances,
            time_limit_seconds: config.time_limit.as_secs_f64(),
            dimensions: &config.dimensions,
            degrees: &config.degrees,
            methods: config.methods.iter().map(|m| m.name()).collect(),
            cells: &self.cells,
            runs: &self.runs,
            mismatches: &self.mismatches,
        })
        .expect("report serializes")
    }
}

/// `F(n, M)` over a grid: header `n,<degrees…>`, one row per `n`.
pub fn count_forms_table(dimensions: &[u32], degrees: &[u32]) -> String {
    let mut out = String::from("n");
    for m in degrees {
        let _ = write!(out, ",{m}");
    }
    out.push('\n');
    for &n in dimensions {
        let _ = write!(out, "{n}");
        for &m in degrees {
            let _ = write!(out, ",{}", count_primitive_forms(n, m));
        }
        out.push('\n');
    }
    out
}

/// Row and column labels of the published table of form counts.
pub const FORM_TABLE_DIMENSIONS: [u32; 11] = [2, 3, 4, 5, 8, 10, 15, 20, 30, 40, 50];
pub const FORM_TABLE_DEGREES: [u32; 8] = [1, 2, 5, 10, 20, 30, 40, 50];
