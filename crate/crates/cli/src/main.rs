//! Command-line front end: evaluate special functions, verify registered
//! identities over parameter grids, cross-check expansion coefficients
//! against their definite integrals, and list the registry.
//!
//! Exit codes: 0 success/pass, 1 numeric failure, 2 usage or unknown id,
//! 3 grid domain violation.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use genfun_core::expansions::{find, registry};
use genfun_core::hyp2f1::hyp2f1;
use genfun_core::legfun::{assoc_legendre_p, ferrers_p, DegreeOrder};
use genfun_core::numcore::elliptic_k;
use genfun_core::orthopoly::{
    chebyshev_t, chebyshev_u, gegenbauer_c, jacobi_p, legendre_poly, JacobiParams,
};
use genfun_core::verify::{
    integral_param_names, resolve_grid, run_integrals, run_verification, verify_param_names,
    GridConfig, VerificationReport,
};
use genfun_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "genfun",
    version,
    about = "Verification harness for generating-function identities of classical orthogonal polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a special function at a point
    Eval(EvalArgs),
    /// Verify an identity's series against its closed form over a grid
    Verify(VerifyArgs),
    /// Cross-check expansion coefficients against definite integrals
    Integrals(IntegralsArgs),
    /// List every registered identity
    List(ListArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// One of: jacobi, gegenbauer, chebt, chebu, legendre, 2f1, legp,
    /// ferrers, elliptick
    function: String,
    /// Polynomial degree
    #[arg(long)]
    n: Option<u32>,
    /// Evaluation point
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
    /// Jacobi parameter alpha
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Jacobi parameter beta
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    /// Gegenbauer parameter, or Legendre-function order
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Legendre-function degree
    #[arg(long, allow_negative_numbers = true)]
    nu: Option<f64>,
    /// Hypergeometric numerator parameter a
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    /// Hypergeometric numerator parameter b
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    /// Hypergeometric denominator parameter c
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    /// Hypergeometric argument
    #[arg(long, allow_negative_numbers = true)]
    z: Option<f64>,
    /// Elliptic modulus
    #[arg(long, allow_negative_numbers = true)]
    k: Option<f64>,
}

#[derive(Copy, Clone, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// Registry id, e.g. exp.jacobi.thm21
    identity_id: String,
    /// Grid file path, or "default" for the identity's built-in grid
    #[arg(long, default_value = "default")]
    grid: String,
    /// Pass/fail tolerance (overrides the grid file; default 1e-8)
    #[arg(long)]
    tol: Option<f64>,
    /// Report destination (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Worker threads; the report is identical for any value
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct IntegralsArgs {
    /// Registry id with a definite-integral form, e.g. exp.gegenbauer.plus
    identity_id: String,
    /// Highest expansion degree checked
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    /// Pass/fail tolerance (default 1e-7)
    #[arg(long)]
    tol: Option<f64>,
    /// Report destination (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

#[derive(Copy, Clone, ValueEnum)]
enum ListFormat {
    Plain,
    Json,
}

#[derive(Args)]
struct ListArgs {
    #[arg(long, value_enum, default_value_t = ListFormat::Plain)]
    format: ListFormat,
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    match Cli::parse().command {
        Command::Eval(args) => match run_eval(&args) {
            Ok(value) => {
                // Shortest round-trip decimal: up to 17 significant digits,
                // never more than needed to reproduce the f64 exactly.
                println!("{value}");
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::Verify(args) => report_outcome(run_verify(&args)),
        Command::Integrals(args) => report_outcome(run_integrals_cmd(&args)),
        Command::List(args) => {
            run_list(&args);
            0
        }
    }
}

fn report_outcome(outcome: Result<bool>) -> i32 {
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::UnknownIdentity(_) => 2,
                Error::Grid(_) => 3,
                _ => 1,
            }
        }
    }
}

fn need(value: Option<f64>, flag: &str) -> Result<f64> {
    value.ok_or_else(|| Error::domain(format!("missing required {flag}")))
}

fn need_n(value: Option<u32>) -> Result<u32> {
    value.ok_or_else(|| Error::domain("missing required --n".to_string()))
}

fn run_eval(args: &EvalArgs) -> Result<f64> {
    match args.function.as_str() {
        "jacobi" => {
            let p = JacobiParams::new(need(args.alpha, "--alpha")?, need(args.beta, "--beta")?)?;
            jacobi_p(need_n(args.n)?, &p, need(args.x, "--x")?)
        }
        "gegenbauer" => gegenbauer_c(need_n(args.n)?, need(args.mu, "--mu")?, need(args.x, "--x")?),
        "chebt" => Ok(chebyshev_t(need_n(args.n)?, need(args.x, "--x")?)),
        "chebu" => Ok(chebyshev_u(need_n(args.n)?, need(args.x, "--x")?)),
        "legendre" => Ok(legendre_poly(need_n(args.n)?, need(args.x, "--x")?)),
        "2f1" => hyp2f1(
            need(args.a, "--a")?,
            need(args.b, "--b")?,
            need(args.c, "--c")?,
            need(args.z, "--z")?,
        ),
        "legp" => assoc_legendre_p(
            &DegreeOrder::new(need(args.nu, "--nu")?, need(args.mu, "--mu")?)?,
            need(args.x, "--x")?,
        ),
        "ferrers" => ferrers_p(
            &DegreeOrder::new(need(args.nu, "--nu")?, need(args.mu, "--mu")?)?,
            need(args.x, "--x")?,
        ),
        "elliptick" => elliptic_k(need(args.k, "--k")?),
        other => Err(Error::domain(format!(
            "unknown function `{other}`; expected one of jacobi, gegenbauer, chebt, chebu, legendre, 2f1, legp, ferrers, elliptick"
        ))),
    }
}

fn emit(
    report: &VerificationReport,
    param_names: &[String],
    format: ReportFormat,
    out: Option<&Path>,
) -> Result<()> {
    let text = match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => report.to_csv(param_names),
    };
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::domain(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_verify(args: &VerifyArgs) -> Result<bool> {
    let spec = find(&args.identity_id)?;
    let cfg = if args.grid == "default" {
        GridConfig::default()
    } else {
        let text = std::fs::read_to_string(&args.grid)
            .map_err(|e| Error::grid(format!("cannot read grid file {}: {e}", args.grid)))?;
        GridConfig::from_json(&text)?
    };
    let tol = args.tol.or(cfg.tol).unwrap_or(1e-8);
    let grid = resolve_grid(spec, &cfg)?;
    let report = run_verification(spec, &grid, tol, args.jobs)?;
    emit(
        &report,
        &verify_param_names(spec),
        args.format,
        args.out.as_deref(),
    )?;
    Ok(report.summary.passed)
}

fn run_integrals_cmd(args: &IntegralsArgs) -> Result<bool> {
    let spec = find(&args.identity_id)?;
    let report = run_integrals(spec, args.n_max, args.tol.unwrap_or(1e-7))?;
    emit(
        &report,
        &integral_param_names(spec),
        args.format,
        args.out.as_deref(),
    )?;
    Ok(report.summary.passed)
}

fn run_list(args: &ListArgs) {
    match args.format {
        ListFormat::Plain => {
            for spec in registry() {
                println!(
                    "{}\t{}\t{}\t{}",
                    spec.id,
                    spec.family_name,
                    spec.description,
                    spec.domain_string()
                );
            }
        }
        ListFormat::Json => {
            let rows: Vec<serde_json::Value> = registry()
                .iter()
                .map(|spec| {
                    serde_json::json!({
                        "id": spec.id,
                        "family": spec.family_name,
                        "description": spec.description,
                        "domain": spec.domain_string(),
                        "has_integral": spec.has_integral,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&rows).expect("static rows serialize")
            );
        }
    }
}
