//! Command-line front end: evaluation, coefficient and spectrum tables,
//! identity verification reports, and mesh export.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fs::File;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::complex::Complex64;
use num::ToPrimitive;

use eckart_core::{
    coeff_matrix, default_grid, eckart_eigenfunction, generate_mesh, jacobi_poly, jacobi_poly_rat,
    legendre_hyp_exact, legendre_trig_exact, parse_rat, pseudo_spherical_harmonic, romanovski_poly,
    run_suite, spectrum_table, GridSpec, JacobiParams, LegendreIndex, Rat, RomanovskiParams,
    Signature, Suite, SurfaceKind, VerifyConfig, SPECTRUM_CSV_HEADER,
};

#[derive(Parser)]
#[command(
    name = "eckart",
    about = "Exact kernel for cotangent-perturbed geodesic motion on the hyperboloid and sphere",
    version
)]
struct Cli {
    /// Output format (mesh: csv = x,y,z rows, text = Wavefront-style).
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,

    /// Relative tolerance of the numeric verification checks.
    #[arg(long, global = true, default_value_t = 1e-7)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a special function or eigenfunction at a point.
    Eval(EvalArgs),
    /// Print the expansion coefficient matrix for a given rank.
    Coeffs(CoeffsArgs),
    /// Print the spectrum table up to a maximal rank.
    Spectrum(SpectrumArgs),
    /// Run identity verification suites and report pass/fail lines.
    Verify(VerifyArgs),
    /// Export a (deformed) hyperboloid or sphere mesh.
    Mesh(MeshArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalFn {
    LegendreHyp,
    LegendreTrig,
    Jacobi,
    Romanovski,
    Harmonic,
    Eigenfunction,
}

#[derive(Args)]
struct EvalArgs {
    /// Which function family to evaluate.
    #[arg(long = "fn", value_enum)]
    func: EvalFn,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Azimuthal label of the perturbed states (may be negative).
    #[arg(long, allow_hyphen_values = true)]
    mt: Option<i64>,
    #[arg(long)]
    n: Option<u32>,
    /// Romanovski weight parameters (rationals).
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Jacobi parameters (rationals).
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
    /// Coupling strength (rational).
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Evaluation point: `t` or `t,phi`; rational input keeps polynomial
    /// evaluations exact.
    #[arg(long, allow_hyphen_values = true)]
    at: String,
}

#[derive(Args)]
struct CoeffsArgs {
    #[arg(long)]
    l: u32,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    b: String,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    lmax: u32,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    b: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// recurrences | eigen | decompositions | romanovski | complexify | all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 4)]
    lmax: u32,
    /// Coupling values (repeatable); defaults to 1/2, 1, 2.
    #[arg(long, allow_hyphen_values = true)]
    b: Vec<String>,
    #[arg(long)]
    grid_min: Option<f64>,
    #[arg(long)]
    grid_max: Option<f64>,
    #[arg(long)]
    grid_n: Option<usize>,
    #[arg(long)]
    fd_order: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MeshKind {
    Hyperboloid,
    HyperboloidDeformed,
    Sphere,
    SphereDeformed,
}

#[derive(Args)]
struct MeshArgs {
    #[arg(long, value_enum)]
    kind: MeshKind,
    /// Deformation coupling (rational); the free kinds ignore it.
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    b: String,
    /// Upper end of the eta range (hyperboloids only).
    #[arg(long, default_value_t = 2.5)]
    t_max: f64,
    #[arg(long, default_value_t = 64)]
    nt: usize,
    #[arg(long, default_value_t = 64)]
    nphi: usize,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn rational(s: &str, what: &str) -> Result<Rat, Usage> {
    parse_rat(s).ok_or_else(|| Usage(format!("{what} must be a rational like 3 or -4/3, got '{s}'")))
}

/// Floats carry 15 significant digits; trailing zeros are trimmed.
fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    if x.abs() >= 1e16 || x.abs() < 1e-4 {
        return format!("{x:.14e}");
    }
    let s = format!("{x:.15}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

fn fmt_complex(v: Complex64) -> String {
    let scale = v.norm().max(1.0);
    if v.im.abs() <= 1e-14 * scale {
        fmt_f64(v.re)
    } else {
        format!(
            "{} {} {}i",
            fmt_f64(v.re),
            if v.im < 0.0 { "-" } else { "+" },
            fmt_f64(v.im.abs())
        )
    }
}

fn write_out(out: &Option<String>, content: &str) -> Result<(), Usage> {
    match out {
        Some(path) => {
            let mut f = File::create(path).map_err(|e| Usage(format!("cannot write {path}: {e}")))?;
            f.write_all(content.as_bytes())
                .map_err(|e| Usage(format!("cannot write {path}: {e}")))?;
            Ok(())
        }
        None => {
            print!("{content}");
            if !content.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn parse_point(at: &str) -> Result<(f64, f64, Option<Rat>), Usage> {
    let parts: Vec<&str> = at.split(',').collect();
    if parts.is_empty() || parts.len() > 2 {
        return Err(Usage(format!("--at expects `t` or `t,phi`, got '{at}'")));
    }
    let exact = if parts.len() == 1 { parse_rat(parts[0]) } else { None };
    let t: f64 = match &exact {
        Some(r) => r.to_f64().ok_or_else(|| Usage("t out of range".into()))?,
        None => parts[0]
            .trim()
            .parse()
            .map_err(|e| Usage(format!("bad t '{}': {e}", parts[0])))?,
    };
    let phi: f64 = if parts.len() == 2 {
        parts[1]
            .trim()
            .parse()
            .map_err(|e| Usage(format!("bad phi '{}': {e}", parts[1])))?
    } else {
        0.0
    };
    Ok((t, phi, exact))
}

fn need<T: Copy>(v: Option<T>, flag: &str, func: &str) -> Result<T, Usage> {
    v.ok_or_else(|| Usage(format!("--{flag} is required for --fn {func}")))
}

fn eval_value(args: &EvalArgs) -> Result<(String, serde_json::Value), Usage> {
    let (t, phi, exact) = parse_point(&args.at)?;
    let evaluate = |expr: &eckart_core::SurfaceExpression, b: f64| -> Result<Complex64, Usage> {
        if expr.signature() == Signature::Hyperbolic && expr.min_s_power() < 0 && t.abs() < 1e-12 {
            return Err(Usage("t = 0 is a singular point of this function".into()));
        }
        Ok(expr.eval(Complex64::new(t, 0.0), phi, Complex64::new(b, 0.0)))
    };
    let scalar = |v: Complex64| -> (String, serde_json::Value) {
        (fmt_complex(v), serde_json::json!({ "re": v.re, "im": v.im }))
    };
    match args.func {
        EvalFn::LegendreHyp | EvalFn::LegendreTrig | EvalFn::Harmonic => {
            let l = need(args.l, "l", "legendre/harmonic")?;
            let m = need(args.m, "m", "legendre/harmonic")?;
            let idx = LegendreIndex::new(l, m)?;
            let expr = match args.func {
                EvalFn::LegendreHyp => legendre_hyp_exact(idx),
                EvalFn::LegendreTrig => legendre_trig_exact(idx),
                _ => pseudo_spherical_harmonic(idx),
            };
            Ok(scalar(evaluate(&expr, 0.0)?))
        }
        EvalFn::Eigenfunction => {
            let l = need(args.l, "l", "eigenfunction")?;
            let mt = need(args.mt, "mt", "eigenfunction")?;
            let b = rational(args.b.as_deref().unwrap_or("1"), "--b")?;
            let f = eckart_eigenfunction(l, mt, &b)?;
            let bf = b.to_f64().ok_or_else(|| Usage("b out of range".into()))?;
            Ok(scalar(evaluate(&f.expression, bf)?))
        }
        EvalFn::Jacobi => {
            let n = need(args.n, "n", "jacobi")?;
            let gamma = rational(
                args.gamma.as_deref().ok_or(Usage("--gamma required".into()))?,
                "--gamma",
            )?;
            let delta = rational(
                args.delta.as_deref().ok_or(Usage("--delta required".into()))?,
                "--delta",
            )?;
            let p = JacobiParams { gamma, delta };
            match exact {
                Some(x) => {
                    let v = jacobi_poly_rat(n, &p, &x);
                    Ok((v.to_string(), serde_json::json!({ "value": v.to_string() })))
                }
                None => {
                    let v = jacobi_poly(n, &p, t);
                    Ok((fmt_f64(v), serde_json::json!({ "re": v, "im": 0.0 })))
                }
            }
        }
        EvalFn::Romanovski => {
            let n = need(args.n, "n", "romanovski")?;
            let alpha = rational(
                args.alpha.as_deref().ok_or(Usage("--alpha required".into()))?,
                "--alpha",
            )?;
            let beta = rational(
                args.beta.as_deref().ok_or(Usage("--beta required".into()))?,
                "--beta",
            )?;
            let p = RomanovskiParams { alpha, beta };
            let coeffs = romanovski_poly(n, &p);
            match exact {
                Some(x) => {
                    let mut acc = Rat::from_integer(0.into());
                    for c in coeffs.iter().rev() {
                        acc = acc * &x + c;
                    }
                    Ok((acc.to_string(), serde_json::json!({ "value": acc.to_string() })))
                }
                None => {
                    let mut acc = 0.0;
                    for c in coeffs.iter().rev() {
                        acc = acc * t + c.to_f64().unwrap_or(f64::NAN);
                    }
                    Ok((fmt_f64(acc), serde_json::json!({ "re": acc, "im": 0.0 })))
                }
            }
        }
    }
}

fn cmd_eval(cli: &Cli, args: &EvalArgs) -> Result<u8, Usage> {
    let (text, json) = eval_value(args)?;
    let content = match cli.format {
        Format::Json => serde_json::to_string_pretty(&json).expect("json") + "\n",
        _ => text + "\n",
    };
    write_out(&cli.out, &content)?;
    Ok(0)
}

fn cmd_coeffs(cli: &Cli, args: &CoeffsArgs) -> Result<u8, Usage> {
    let b = rational(&args.b, "--b")?;
    let m = coeff_matrix(args.l, &b)?;
    let content = match cli.format {
        Format::Json => serde_json::to_string_pretty(&m.to_json()).expect("json") + "\n",
        Format::Csv => {
            let mut s = String::new();
            for row in m.rows() {
                s.push_str(&row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","));
                s.push('\n');
            }
            s
        }
        Format::Text => {
            let width = m
                .rows()
                .iter()
                .flatten()
                .map(|e| e.to_string().len())
                .max()
                .unwrap_or(1);
            let mut s = format!("a[l={}, b={}]  (phase law: -(col - row))\n", m.l, m.b);
            for row in m.rows() {
                let cells: Vec<String> =
                    row.iter().map(|e| format!("{:>width$}", e.to_string())).collect();
                s.push_str(&format!("[ {} ]\n", cells.join("  ")));
            }
            s
        }
    };
    write_out(&cli.out, &content)?;
    Ok(0)
}

fn cmd_spectrum(cli: &Cli, args: &SpectrumArgs) -> Result<u8, Usage> {
    let b = rational(&args.b, "--b")?;
    let table = spectrum_table(args.lmax, &b);
    let content = match cli.format {
        Format::Json => {
            let rows: Vec<_> = table.iter().map(|e| e.to_json()).collect();
            serde_json::to_string_pretty(&rows).expect("json") + "\n"
        }
        _ => {
            let mut s = String::from(SPECTRUM_CSV_HEADER);
            s.push('\n');
            for e in &table {
                s.push_str(&e.csv_row());
                s.push('\n');
            }
            s
        }
    };
    write_out(&cli.out, &content)?;
    Ok(0)
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<u8, Usage> {
    let suite: Suite = args.suite.parse().map_err(Usage)?;
    let mut cfg = VerifyConfig {
        l_max: args.lmax,
        tol: cli.tol,
        ..Default::default()
    };
    if !args.b.is_empty() {
        cfg.b_values = args
            .b
            .iter()
            .map(|s| rational(s, "--b"))
            .collect::<Result<Vec<_>, _>>()?;
    }
    if args.grid_min.is_some()
        || args.grid_max.is_some()
        || args.grid_n.is_some()
        || args.fd_order.is_some()
    {
        let base = default_grid(Signature::Hyperbolic);
        cfg.grid = Some(GridSpec::new(
            args.grid_min.unwrap_or(base.t_min),
            args.grid_max.unwrap_or(base.t_max),
            args.grid_n.unwrap_or(base.n),
            args.fd_order.unwrap_or(base.fd_order),
        )?);
    }
    let reports = run_suite(suite, &cfg);
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let content = match cli.format {
        Format::Json => {
            let rows: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
            serde_json::to_string_pretty(&rows).expect("json") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("id,params,status,witness\n");
            for r in &reports {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    r.id,
                    r.params,
                    if r.passed() { "pass" } else { "fail" },
                    r.witness.replace(',', ";")
                ));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&r.line());
                s.push('\n');
            }
            s.push_str(&format!(
                "{} checks, {} failed ({})\n",
                reports.len(),
                failed,
                eckart_core::verify::describe_config(&cfg)
            ));
            s
        }
    };
    write_out(&cli.out, &content)?;
    Ok(if failed == 0 { 0 } else { 1 })
}

fn cmd_mesh(cli: &Cli, args: &MeshArgs) -> Result<u8, Usage> {
    let b = rational(&args.b, "--b")?
        .to_f64()
        .ok_or_else(|| Usage("b out of range".into()))?;
    let kind = match args.kind {
        MeshKind::Hyperboloid => SurfaceKind::HyperboloidFree,
        MeshKind::HyperboloidDeformed => SurfaceKind::HyperboloidDeformed { b },
        MeshKind::Sphere => SurfaceKind::SphereFree,
        MeshKind::SphereDeformed => SurfaceKind::SphereDeformed { b },
    };
    let mesh = generate_mesh(kind, args.t_max, args.nt, args.nphi)?;
    let mut buf = Vec::new();
    match cli.format {
        Format::Csv => mesh.write_csv(&mut buf)?,
        Format::Text => mesh.write_obj(&mut buf)?,
        Format::Json => {
            let v = serde_json::json!({
                "nt": mesh.n_t,
                "nphi": mesh.n_phi,
                "points": mesh.points,
            });
            buf = serde_json::to_string_pretty(&v).expect("json").into_bytes();
            buf.push(b'\n');
        }
    }
    write_out(&cli.out, &String::from_utf8(buf).expect("utf8 output"))?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(args) => cmd_eval(&cli, args),
        Command::Coeffs(args) => cmd_coeffs(&cli, args),
        Command::Spectrum(args) => cmd_spectrum(&cli, args),
        Command::Verify(args) => cmd_verify(&cli, args),
        Command::Mesh(args) => cmd_mesh(&cli, args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
