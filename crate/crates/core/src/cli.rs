//! Command-line front end. Every command reads JSON (a file path or inline text)
//! and writes compact JSON to standard output.
//!
//! Exit codes: 0 success or feasible, 1 infeasible, 2 usage or input error,
//! 3 internal failure.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::array::StripConcaveArray;
use crate::boundary::{shift_mu, BoundarySpec};
use crate::config::ConvexConfig;
use crate::construct::{mu_general_build_with, BuildMode};
use crate::error::{Error, Result};
use crate::feasibility::{check_general_with, check_parallelogram_with, check_trapezoid_with, Strategy};
use crate::flow::{
    enumerate_vertices, gamma, gamma_inv, gamma_inv_pattern, path_decompose, zigzag_swap, zigzag_swap_flow, Flow,
};
use crate::polytope::{count_scaled_points, facet_count_formula, facets, kostka};
use crate::rat::{parse_rat, Rat};
use crate::tableau::{content, pattern_to_tableau, tableau_to_pattern};
use crate::{fixtures, json as js};

/// Environment variable overriding the reduction constant.
pub const REDUCTION_C_VAR: &str = "STRIPCONCAVE_REDUCTION_C";

#[derive(Parser, Debug)]
#[command(name = "stripconcave", version, about = "Strip-concave arrays, flows and tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide feasibility of boundary data.
    Check {
        #[command(flatten)]
        input: SpecInput,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        /// Test every subset instead of the worst one per size.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Build an array with the given boundary.
    Build {
        #[command(flatten)]
        input: SpecInput,
        /// Lower the top block one unit at a time.
        #[arg(long)]
        proof_verbatim: bool,
    },
    /// Convert between arrays and flows.
    Flow {
        #[command(subcommand)]
        dir: FlowDir,
    },
    /// Vertices of the polytope with fixed `lambda`, `lambda_bar` and zero `mu`.
    Vertices {
        /// JSON with `lambda` and optional `lambda_bar`.
        #[arg(long)]
        spec: String,
    },
    /// Zigzag swap at a layer of a flow or an array.
    Swap {
        #[arg(long)]
        layer: usize,
        #[command(flatten)]
        input: FlowInput,
    },
    /// Path decomposition of a flow or of the flow of an array.
    Decompose {
        #[command(flatten)]
        input: FlowInput,
    },
    /// Facets of the boundary cone of the (n, m) trapezoid.
    Facets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Number of integer arrays with the given boundary.
    Kostka {
        #[arg(long)]
        spec: String,
    },
    /// Number of (1/k)-integer arrays with the given boundary.
    Count {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Convert between patterns and skew tableaux.
    Tableau {
        #[command(subcommand)]
        op: TableauOp,
    },
    /// Print the built-in worked examples.
    Fixtures,
}

#[derive(Args, Debug)]
struct SpecInput {
    /// Boundary data: `lambda`, `lambda_bar`, `mu`, `nu`, optionally `config`.
    #[arg(long)]
    spec: String,
    /// Configuration `{"n", "a", "b"}`; inferred from the lengths when absent.
    #[arg(long)]
    config: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct FlowInput {
    #[arg(long)]
    flow: Option<String>,
    #[arg(long)]
    array: Option<String>,
}

#[derive(Subcommand, Debug)]
enum FlowDir {
    /// Array to flow.
    To {
        #[arg(long)]
        array: String,
    },
    /// Flow to array with zero left column.
    From {
        #[arg(long)]
        flow: String,
        /// Bottom row derivative; read off the flow when absent.
        #[arg(long)]
        lambda: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum TableauOp {
    FromPattern {
        #[arg(long)]
        pattern: String,
    },
    ToPattern {
        #[arg(long)]
        tableau: String,
    },
    Content {
        #[arg(long)]
        tableau: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Auto,
    Trapezoid,
    Parallelogram,
    General,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(v: &Value) -> Self {
        Outcome { code: 0, stdout: js::to_string(v), stderr: String::new() }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Infeasible(_) => 1,
        Error::Internal(_) => 3,
        _ => 2,
    }
}

/// Runs the command line `args`, including the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => {
            let stdout = match &e {
                Error::Infeasible(c) => js::to_string(&json!({
                    "feasible": false,
                    "certificate": js::certificate_to_json(c),
                })),
                _ => String::new(),
            };
            Outcome { code: exit_code(&e), stdout, stderr: format!("error: {e}") }
        }
    }
}

/// Inline JSON when the text starts like JSON, otherwise a file path.
fn load(arg: &str) -> Result<Value> {
    let text = match arg.trim_start().chars().next() {
        Some('{' | '[') => arg.to_string(),
        _ => std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))?,
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn reduction_constant() -> Result<Option<Rat>> {
    match std::env::var(REDUCTION_C_VAR) {
        Ok(s) => parse_rat(s.trim()).map(Some),
        Err(_) => Ok(None),
    }
}

fn spec_and_config(input: &SpecInput) -> Result<(BoundarySpec, ConvexConfig)> {
    let v = load(&input.spec)?;
    let spec = js::spec_from_json(&v)?;
    let config = match (&input.config, v.get("config")) {
        (Some(c), _) => js::config_from_json(&load(c)?)?,
        (None, Some(c)) => js::config_from_json(c)?,
        (None, None) => spec.infer_config()?,
    };
    Ok((spec, config))
}

fn flow_input(input: &FlowInput) -> Result<Flow> {
    match (&input.flow, &input.array) {
        (Some(f), _) => js::flow_from_json(&load(f)?),
        (None, Some(a)) => gamma(&js::array_from_json(&load(a)?)?),
        (None, None) => Err(Error::Parse("give --flow or --array".into())),
    }
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Check { input, mode, exhaustive } => {
            let (spec, config) = spec_and_config(&input)?;
            let strategy = if exhaustive { Strategy::Exhaustive } else { Strategy::Shortcut };
            let mode = match mode {
                Mode::Auto if config.is_trapezoid() => Mode::Trapezoid,
                Mode::Auto if config.is_parallelogram() => Mode::Parallelogram,
                Mode::Auto => Mode::General,
                other => other,
            };
            let verdict = match mode {
                Mode::Trapezoid => check_trapezoid_with(&spec, spec.n(), spec.m(), strategy)?,
                Mode::Parallelogram => check_parallelogram_with(&spec, spec.n(), spec.m(), strategy)?,
                _ => check_general_with(&config, &spec, strategy, reduction_constant()?.as_ref())?,
            };
            let mut out = Outcome::ok(&js::verdict_to_json(&verdict));
            out.code = if verdict.feasible { 0 } else { 1 };
            Ok(out)
        }
        Command::Build { input, proof_verbatim } => {
            let (spec, config) = spec_and_config(&input)?;
            let mode = if proof_verbatim { BuildMode::ProofVerbatim } else { BuildMode::Accelerated };
            let x = mu_general_build_with(&config, &spec, mode, reduction_constant()?.as_ref())?;
            Ok(Outcome::ok(&js::array_to_json(&x)))
        }
        Command::Flow { dir: FlowDir::To { array } } => {
            let x = js::array_from_json(&load(&array)?)?;
            Ok(Outcome::ok(&js::flow_to_json(&gamma(&x)?)))
        }
        Command::Flow { dir: FlowDir::From { flow, lambda } } => {
            let g = js::flow_from_json(&load(&flow)?)?;
            let x = match lambda {
                Some(l) => gamma_inv(&g, &js::vec_from_json(&load(&l)?, "lambda")?)?,
                None => gamma_inv_pattern(&g)?.integrate(),
            };
            Ok(Outcome::ok(&js::array_to_json(&x)))
        }
        Command::Vertices { spec } => {
            let v = load(&spec)?;
            let lambda = js::vec_from_json(v.get("lambda").ok_or_else(|| Error::Parse("missing lambda".into()))?, "lambda")?;
            let lambda_bar = match v.get("lambda_bar") {
                Some(x) => js::vec_from_json(x, "lambda_bar")?,
                None => Vec::new(),
            };
            let verts = enumerate_vertices(&lambda, &lambda_bar)?;
            let list: Vec<Value> = verts.iter().map(js::array_to_json).collect();
            Ok(Outcome::ok(&json!({ "count": list.len(), "vertices": list })))
        }
        Command::Swap { layer, input } => {
            if let Some(a) = &input.array {
                let x = js::array_from_json(&load(a)?)?;
                return Ok(Outcome::ok(&js::array_to_json(&zigzag_swap(&x, layer)?)));
            }
            let g = flow_input(&input)?;
            Ok(Outcome::ok(&js::flow_to_json(&zigzag_swap_flow(&g, layer)?)))
        }
        Command::Decompose { input } => {
            let d = path_decompose(&flow_input(&input)?)?;
            Ok(Outcome::ok(&js::decomposition_to_json(&d)))
        }
        Command::Facets { n, m, count_only } => {
            if n == 0 {
                return Err(Error::Precondition("n must be positive".into()));
            }
            let list = facets(n, m);
            let mut v = json!({ "count": list.len(), "formula": facet_count_formula(n, m).to_string() });
            if !count_only {
                v["facets"] = Value::Array(list.iter().map(js::facet_to_json).collect());
            }
            Ok(Outcome::ok(&v))
        }
        Command::Kostka { spec } => {
            let s = shift_mu(&js::spec_from_json(&load(&spec)?)?);
            let k = kostka(&s.lambda, &s.lambda_bar, &s.nu)?;
            Ok(Outcome { code: 0, stdout: k.to_string(), stderr: String::new() })
        }
        Command::Count { spec, k } => {
            let s = shift_mu(&js::spec_from_json(&load(&spec)?)?);
            let c = count_scaled_points(&s.lambda, &s.lambda_bar, &s.nu, k)?;
            Ok(Outcome { code: 0, stdout: c.to_string(), stderr: String::new() })
        }
        Command::Tableau { op } => match op {
            TableauOp::FromPattern { pattern } => {
                let p = js::pattern_from_json(&load(&pattern)?)?;
                Ok(Outcome::ok(&js::tableau_to_json(&pattern_to_tableau(&p)?)))
            }
            TableauOp::ToPattern { tableau } => {
                let t = js::tableau_from_json(&load(&tableau)?)?;
                Ok(Outcome::ok(&js::pattern_to_json(&tableau_to_pattern(&t)?)))
            }
            TableauOp::Content { tableau } => {
                let t = js::tableau_from_json(&load(&tableau)?)?;
                t.validate()?;
                Ok(Outcome::ok(&json!(content(&t))))
            }
        },
        Command::Fixtures => Ok(Outcome::ok(&fixtures_json())),
    }
}

/// All built-in examples keyed by name.
pub fn fixtures_json() -> Value {
    let hex: StripConcaveArray = fixtures::hexagon_array();
    let trap = fixtures::trapezoid_array();
    json!({
        "hexagon_array": js::array_to_json(&hex),
        "hexagon_spec": js::spec_to_json(&hex.boundary()),
        "hexagon_pattern": js::pattern_to_json(&fixtures::hexagon_pattern()),
        "trapezoid_array": js::array_to_json(&trap),
        "trapezoid_spec": js::spec_to_json(&trap.boundary()),
        "trapezoid_pattern": js::pattern_to_json(&fixtures::trapezoid_pattern()),
        "trapezoid_flow": js::flow_to_json(&fixtures::trapezoid_flow()),
        "swapped_flow": js::flow_to_json(&fixtures::swapped_flow()),
        "trapezoid_tableau": js::tableau_to_json(&fixtures::trapezoid_tableau()),
    })
}
