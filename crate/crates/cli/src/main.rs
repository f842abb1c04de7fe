//! Command-line front end: parse a system file, run a triangular
//! decomposition, emit text or JSON, optionally run the sampling
//! verification.
//!
//! Input format: the first meaningful line is `order: x < y < z`, every
//! following line is one polynomial; `#` starts a comment. See the crate
//! README for the grammar and the JSON schema.
//!
//! Exit codes: 0 success, 1 failed verification, 2 parse error,
//! 3 inconsistent system, 4 branch limit exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

use tridecomp::algebraic_decomp::{decompose_traced, DecompTrace, DecomposeError};
use tridecomp::config::DecomposeConfig;
use tridecomp::diff_decomp::ddecompose_traced;
use tridecomp::poly_core::{parse_poly, Poly, VarOrder};
use tridecomp::verify::{check_ddecomposition, check_decomposition, VerifyConfig, VerifyReport};

#[derive(Parser)]
#[command(name = "tridecomp", version, about = "Triangular decomposition of polynomial systems")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decompose an algebraic polynomial system into regular triangular sets
    DecomposeAlg(JobArgs),
    /// Decompose an ordinary differential polynomial system into saturated chains
    DecomposeDiff(JobArgs),
}

#[derive(Args)]
struct JobArgs {
    /// Input file: `order: x < y < z` on the first line, then one
    /// polynomial per line; `#` comments. In differential mode derivatives
    /// are written y'' or y^(3).
    file: PathBuf,
    /// Run the sampling verification and fail (exit 1) when it fails
    #[arg(long)]
    verify: bool,
    /// Seed for all randomized sampling
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Branch exploration cap
    #[arg(long, default_value_t = 10_000)]
    max_branches: u64,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include the branch-exploration trace in the output
    #[arg(long)]
    trace: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Algebraic,
    Differential,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Algebraic => "algebraic",
            Mode::Differential => "differential",
        }
    }
}

/// A fully parsed job.
struct JobSpec {
    mode: Mode,
    order: VarOrder,
    system: Vec<Poly>,
}

#[derive(Debug)]
struct CliParseError {
    line: usize,
    msg: String,
}

fn parse_job(input: &str, mode: Mode) -> Result<JobSpec, CliParseError> {
    let mut order: Option<VarOrder> = None;
    let mut system: Vec<Poly> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match &order {
            None => {
                let Some(rest) = line.strip_prefix("order:") else {
                    return Err(CliParseError {
                        line: idx + 1,
                        msg: "expected `order: x < y < z` as the first line".into(),
                    });
                };
                let names: Vec<String> =
                    rest.split('<').map(|s| s.trim().to_string()).collect();
                if names.iter().any(|n| n.is_empty()) {
                    return Err(CliParseError {
                        line: idx + 1,
                        msg: "empty variable name in order".into(),
                    });
                }
                for (i, n) in names.iter().enumerate() {
                    if names[..i].contains(n) {
                        return Err(CliParseError {
                            line: idx + 1,
                            msg: format!("duplicate variable `{}` in order", n),
                        });
                    }
                    if !n.chars().next().map(|c| c.is_ascii_alphabetic() || c == '_').unwrap_or(false)
                        || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    {
                        return Err(CliParseError {
                            line: idx + 1,
                            msg: format!("invalid variable name `{}`", n),
                        });
                    }
                }
                order = Some(match mode {
                    Mode::Algebraic => VarOrder::algebraic(names),
                    Mode::Differential => VarOrder::differential(names),
                });
            }
            Some(ord) => match parse_poly(line, ord) {
                Ok(p) => system.push(p),
                Err(e) => {
                    return Err(CliParseError {
                        line: idx + 1,
                        msg: format!("column {}: {}", e.pos + 1, e.msg),
                    })
                }
            },
        }
    }
    let Some(order) = order else {
        return Err(CliParseError { line: 1, msg: "empty input: missing order line".into() });
    };
    if system.is_empty() {
        return Err(CliParseError { line: 1, msg: "empty system: no polynomials given".into() });
    }
    Ok(JobSpec { mode, order, system })
}

#[derive(Serialize)]
struct ComponentOut {
    chain: Vec<String>,
    ineq_product: String,
}

#[derive(Serialize)]
struct TraceOut {
    visited_states: usize,
    eliminations: u64,
    states: Vec<TraceState>,
}

#[derive(Serialize)]
struct TraceState {
    found: Vec<String>,
    pending: Vec<String>,
    ineqs: Vec<String>,
}

#[derive(Serialize)]
struct Document {
    schema: u32,
    mode: String,
    order: Vec<String>,
    components: Vec<ComponentOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verify: Option<VerifyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<TraceOut>,
}

fn render_text(doc: &Document) -> String {
    let mut out = String::new();
    out.push_str(&format!("schema: {}\n", doc.schema));
    out.push_str(&format!("mode: {}\n", doc.mode));
    out.push_str(&format!("order: {}\n", doc.order.join(" < ")));
    out.push_str(&format!("components: {}\n", doc.components.len()));
    for (i, c) in doc.components.iter().enumerate() {
        out.push_str(&format!("component {}:\n", i + 1));
        for (j, p) in c.chain.iter().enumerate() {
            out.push_str(&format!("  T{}: {}\n", j + 1, p));
        }
        out.push_str(&format!("  D: {}\n", c.ineq_product));
    }
    if let Some(v) = &doc.verify {
        out.push_str(&format!(
            "verify: forward={} backward={} residual_max={:e} seed={} {}\n",
            v.forward,
            v.backward,
            v.residual_max,
            v.seed,
            if v.forward == 1.0 && v.backward == 1.0 { "pass" } else { "FAIL" }
        ));
    }
    if let Some(t) = &doc.trace {
        out.push_str(&format!(
            "trace: visited_states={} eliminations={}\n",
            t.visited_states, t.eliminations
        ));
    }
    out
}

fn run(mode: Mode, args: &JobArgs) -> ExitCode {
    let input = match std::fs::read_to_string(&args.file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {}", args.file.display(), e);
            return ExitCode::from(2);
        }
    };
    let job = match parse_job(&input, mode) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("parse error at line {}: {}", e.line, e.msg);
            return ExitCode::from(2);
        }
    };
    let cfg = DecomposeConfig { max_branches: args.max_branches };
    let mut trace = DecompTrace::default();
    let mut components: Vec<ComponentOut> = Vec::new();
    let mut verify: Option<VerifyReport> = None;

    let result: Result<(), DecomposeError> = match job.mode {
        Mode::Algebraic => decompose_traced(&job.system, &job.order, &cfg, &mut trace).map(
            |chains| {
                for c in &chains {
                    components.push(ComponentOut {
                        chain: c.polys.iter().map(|p| p.to_string_with(&job.order)).collect(),
                        ineq_product: c.ineq_product.to_string_with(&job.order),
                    });
                }
                if args.verify {
                    verify = Some(check_decomposition(
                        &job.system,
                        &chains,
                        &job.order,
                        &VerifyConfig { samples: 50, seed: args.seed },
                    ));
                }
            },
        ),
        Mode::Differential => ddecompose_traced(&job.system, &job.order, &cfg, &mut trace)
            .map(|chains| {
                for c in &chains {
                    components.push(ComponentOut {
                        chain: c.polys.iter().map(|p| p.to_string_with(&job.order)).collect(),
                        ineq_product: c.ineq_product.to_string_with(&job.order),
                    });
                }
                if args.verify {
                    verify = Some(check_ddecomposition(
                        &job.system,
                        &chains,
                        &VerifyConfig { samples: 50, seed: args.seed },
                    ));
                }
            }),
    };
    if let Err(e) = result {
        let code = match e {
            DecomposeError::Inconsistent => 3,
            DecomposeError::BranchLimitExceeded => 4,
        };
        eprintln!("error: {}", e);
        return ExitCode::from(code);
    }

    let trace_out = args.trace.then(|| TraceOut {
        visited_states: trace.visits.len(),
        eliminations: trace.eliminations,
        states: trace
            .visits
            .iter()
            .map(|t| TraceState {
                found: t.found.iter().map(|p| p.to_string_with(&job.order)).collect(),
                pending: t.pending.iter().map(|p| p.to_string_with(&job.order)).collect(),
                ineqs: t.ineqs.iter().map(|p| p.to_string_with(&job.order)).collect(),
            })
            .collect(),
    });

    let doc = Document {
        schema: 1,
        mode: job.mode.name().to_string(),
        order: job.order.names().to_vec(),
        components,
        verify,
        trace: trace_out,
    };
    match args.format {
        Format::Text => print!("{}", render_text(&doc)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc).expect("serializable")),
    }
    if let Some(v) = &doc.verify {
        if !(v.forward == 1.0 && v.backward == 1.0) {
            return ExitCode::from(1);
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.cmd {
        Cmd::DecomposeAlg(args) => run(Mode::Algebraic, args),
        Cmd::DecomposeDiff(args) => run(Mode::Differential, args),
    }
}
