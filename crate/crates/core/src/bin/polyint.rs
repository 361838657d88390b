use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use polyint::bench::{count_forms_table, run_bench, BenchConfig, FORM_TABLE_DEGREES, FORM_TABLE_DIMENSIONS};
use polyint::clique::{brute_force_clique, clique_estimate, sweep, Graph, DEFAULT_EXPANSION_LIMIT};
use polyint::integrate::{count_primitive_forms, IntegrationConfig, MethodChoice, PolynomialInput};
use polyint::polynomial::{parse_expression, SparsePolynomial};
use polyint::random::{random_instance, Generator, InstanceParams, DEFAULT_VERTEX_BOX};
use polyint::request::{parse_linear_power, IntegrationRequest, IntegrationResult};
use polyint::simplex::parse_point_list;

const EXIT_USAGE: u8 = 1;
const EXIT_COMPUTATION: u8 = 2;

/// Exact integration of polynomials over rational simplices.
#[derive(Parser)]
#[command(name = "polyint", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate one polynomial over one simplex.
    Integrate(IntegrateArgs),
    /// Print a seeded random integration request.
    RandomInstance(RandomArgs),
    /// Time methods over a grid of dimensions and degrees.
    Bench(BenchArgs),
    /// Estimate a clique number from integrals of the Motzkin–Straus form.
    Clique(CliqueArgs),
    /// Tabulate the number of primitive linear forms F(n, M).
    CountForms(CountFormsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct IntegrateArgs {
    /// Full request as a JSON file or inline JSON.
    #[arg(long, conflicts_with_all = ["vertices", "expr", "sparse", "linear_power"])]
    request: Option<String>,
    /// Vertex list as a JSON file or inline JSON, e.g. [[0,0],[1,0],[0,1]].
    #[arg(long, required_unless_present = "request")]
    vertices: Option<String>,
    /// Fully parenthesized expression in x1, x2, ...
    #[arg(long, group = "poly")]
    expr: Option<String>,
    /// Sparse term list [{"coef":"p/q","exps":[..]}, ...], file or inline.
    #[arg(long, group = "poly")]
    sparse: Option<String>,
    /// {"form":[..],"exponent":M}, file or inline.
    #[arg(long, group = "poly")]
    linear_power: Option<String>,
    #[arg(long, default_value = "auto")]
    method: String,
    /// Abort after this many seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputFormat,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args, Clone, Copy)]
struct CapArgs {
    #[arg(long, default_value_t = IntegrationConfig::default().enumeration_limit)]
    enumeration_limit: u64,
    #[arg(long, default_value_t = IntegrationConfig::default().duality_cap)]
    duality_cap: usize,
    #[arg(long, default_value_t = IntegrationConfig::default().polarization_cap)]
    polarization_cap: u32,
}

impl CapArgs {
    fn config(self) -> IntegrationConfig {
        IntegrationConfig {
            enumeration_limit: self.enumeration_limit,
            duality_cap: self.duality_cap,
            polarization_cap: self.polarization_cap,
        }
    }
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long, short = 'n')]
    dimension: usize,
    #[arg(long, short = 'm')]
    degree: u32,
    /// monomial, dense-homogeneous or few-effective:D
    #[arg(long, default_value = "monomial")]
    generator: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_VERTEX_BOX)]
    vertex_box: i64,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
    dimensions: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1,2,5")]
    degrees: Vec<u32>,
    #[arg(long, default_value_t = 5)]
    instances: usize,
    #[arg(long, default_value = "monomial")]
    generator: String,
    #[arg(long, value_delimiter = ',', default_value = "waring,duality,laurent")]
    methods: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Seconds per instance and method.
    #[arg(long, default_value_t = 600.0)]
    time_limit: f64,
    #[arg(long, default_value_t = DEFAULT_VERTEX_BOX)]
    vertex_box: i64,
    #[arg(long, value_enum, default_value = "csv")]
    output: OutputFormat,
    /// Tabulate F(n, M) over the grid instead of timing methods.
    #[arg(long)]
    count_forms: bool,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args)]
struct CliqueArgs {
    /// Graph as {"n":4,"edges":[[1,2],...]}, file or inline.
    #[arg(long)]
    graph: String,
    /// A positive exponent, or `sweep` to raise p until the estimate matches.
    #[arg(long, default_value = "sweep")]
    p: String,
    /// Largest p tried by a sweep.
    #[arg(long, default_value_t = 200)]
    max_p: u32,
    /// Largest multinomial expansion allowed.
    #[arg(long, default_value_t = DEFAULT_EXPANSION_LIMIT)]
    expansion_limit: u64,
}

#[derive(Args)]
struct CountFormsArgs {
    #[arg(long, value_delimiter = ',')]
    dimensions: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<u32>>,
    #[arg(long, value_enum, default_value = "csv")]
    output: OutputFormat,
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn computation(message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_COMPUTATION,
        message: message.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Integrate(args) => cmd_integrate(args),
        Command::RandomInstance(args) => cmd_random_instance(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Clique(args) => cmd_clique(args),
        Command::CountForms(args) => cmd_count_forms(args),
    };
    match result {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            if !text.ends_with('\n') {
                let _ = out.write_all(b"\n");
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Inline JSON when the argument starts like JSON, a file path otherwise.
fn inline_or_file(arg: &str) -> Result<String, Failure> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).map_err(|e| usage(format!("cannot read `{arg}`: {e}")))
}

fn cmd_integrate(args: IntegrateArgs) -> Result<String, Failure> {
    let request = match &args.request {
        Some(r) => IntegrationRequest::from_json(&inline_or_file(r)?).map_err(usage)?,
        None => request_from_flags(&args)?,
    };
    let config = args.caps.config();
    let result = match args.time_limit {
        None => request.run(&config).map_err(computation)?,
        Some(secs) => {
            let limit = Duration::try_from_secs_f64(secs).map_err(|_| usage("invalid --time-limit"))?;
            let (tx, rx) = mpsc::channel();
            thread::spawn(move || {
                let _ = tx.send(request.run(&config));
            });
            rx.recv_timeout(limit)
                .map_err(|_| computation(format!("time limit of {secs} s exceeded")))?
                .map_err(computation)?
        }
    };
    Ok(match args.output {
        OutputFormat::Json => result.to_json(),
        OutputFormat::Csv => result_csv(&result),
    })
}

fn result_csv(result: &IntegrationResult) -> String {
    format!(
        "integral,method,elapsed_ms\n{},{},{:.3}\n",
        polyint::format_rational(&result.integral),
        result.method,
        result.elapsed_ms
    )
}

fn request_from_flags(args: &IntegrateArgs) -> Result<IntegrationRequest, Failure> {
    let vertices_arg = args
        .vertices
        .as_deref()
        .ok_or_else(|| usage("--vertices is required"))?;
    let vertices = parse_point_list(&inline_or_file(vertices_arg)?).map_err(usage)?;
    let n = vertices.first().map_or(0, Vec::len);
    let polynomial = if let Some(expr) = &args.expr {
        PolynomialInput::Expression(parse_expression(expr, n).map_err(usage)?)
    } else if let Some(sparse) = &args.sparse {
        PolynomialInput::Sparse(SparsePolynomial::from_json(&inline_or_file(sparse)?, Some(n)).map_err(usage)?)
    } else if let Some(lp) = &args.linear_power {
        let (form, exponent) = parse_linear_power(&inline_or_file(lp)?).map_err(usage)?;
        PolynomialInput::LinearPower { form, exponent }
    } else {
        return Err(usage("one of --expr, --sparse, --linear-power is required"));
    };
    let method: MethodChoice = args.method.parse().map_err(usage)?;
    Ok(IntegrationRequest {
        vertices,
        polynomial,
        method,
    })
}

fn cmd_random_instance(args: RandomArgs) -> Result<String, Failure> {
    if args.dimension == 0 || args.vertex_box < 1 {
        return Err(usage("dimension and vertex box must be positive"));
    }
    let generator: Generator = args.generator.parse().map_err(usage)?;
    let params = InstanceParams {
        vertex_box: args.vertex_box,
        ..InstanceParams::new(args.dimension, args.degree, generator, args.seed)
    };
    Ok(random_instance(&params).to_json())
}

fn cmd_bench(args: BenchArgs) -> Result<String, Failure> {
    if args.count_forms {
        return cmd_count_forms(CountFormsArgs {
            dimensions: Some(args.dimensions.iter().map(|&n| n as u32).collect()),
            degrees: Some(args.degrees),
            output: args.output,
        });
    }
    let generator: Generator = args.generator.parse().map_err(usage)?;
    let methods = args
        .methods
        .iter()
        .map(|m| m.parse::<MethodChoice>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage)?;
    if args.dimensions.contains(&0) || args.instances == 0 || args.vertex_box < 1 {
        return Err(usage("dimensions, instances and vertex box must be positive"));
    }
    let time_limit = Duration::try_from_secs_f64(args.time_limit).map_err(|_| usage("invalid --time-limit"))?;
    let config = BenchConfig {
        dimensions: args.dimensions,
        degrees: args.degrees,
        instances: args.instances,
        generator,
        methods,
        seed: args.seed,
        time_limit,
        vertex_box: args.vertex_box,
        integration: args.caps.config(),
    };
    let report = run_bench(&config);
    let text = match args.output {
        OutputFormat::Csv => report.to_csv(&config),
        OutputFormat::Json => report.to_json(&config),
    };
    if !report.mismatches.is_empty() {
        return Err(computation(format!(
            "{} instance(s) with disagreeing methods\n{text}",
            report.mismatches.len()
        )));
    }
    Ok(text)
}

#[derive(Serialize)]
struct CliqueOutput {
    estimate: u32,
    p_used: u32,
    brute_force: u32,
    #[serde(rename = "match")]
    matched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    hit_expansion_limit: Option<bool>,
}

fn cmd_clique(args: CliqueArgs) -> Result<String, Failure> {
    let graph = Graph::from_json(&inline_or_file(&args.graph)?).map_err(usage)?;
    let omega = brute_force_clique(&graph).map_err(computation)?;
    let out = if args.p == "sweep" {
        let report = sweep(&graph, args.max_p, args.expansion_limit).map_err(computation)?;
        let last = report
            .steps
            .last()
            .ok_or_else(|| computation("expansion limit exceeded already at p = 1"))?;
        CliqueOutput {
            estimate: last.estimate,
            p_used: last.p,
            brute_force: omega,
            matched: report.matched_at.is_some(),
            hit_expansion_limit: Some(report.hit_limit),
        }
    } else {
        let p: u32 = args
            .p
            .parse()
            .ok()
            .filter(|&p| p > 0)
            .ok_or_else(|| usage("--p must be a positive integer or `sweep`"))?;
        let estimate = clique_estimate(&graph, p, args.expansion_limit).map_err(computation)?;
        CliqueOutput {
            estimate,
            p_used: p,
            brute_force: omega,
            matched: estimate == omega,
            hit_expansion_limit: None,
        }
    };
    Ok(serde_json::to_string(&out).expect("clique output serializes"))
}

fn cmd_count_forms(args: CountFormsArgs) -> Result<String, Failure> {
    let dims = args.dimensions.unwrap_or_else(|| FORM_TABLE_DIMENSIONS.to_vec());
    let degrees = args.degrees.unwrap_or_else(|| FORM_TABLE_DEGREES.to_vec());
    if dims.contains(&0) || degrees.contains(&0) {
        return Err(usage("dimensions and degrees must be positive"));
    }
    Ok(match args.output {
        OutputFormat::Csv => count_forms_table(&dims, &degrees),
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = dims
                .iter()
                .flat_map(|&n| {
                    degrees.iter().map(move |&m| {
                        serde_json::json!({"n": n, "degree": m, "count": count_primitive_forms(n, m).to_string()})
                    })
                })
                .collect();
            serde_json::to_string(&rows).expect("table serializes")
        }
    })
}
