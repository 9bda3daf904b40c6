//! The `polar-calc` command-line front end: one subcommand per library
//! operation, each emitting a single JSON report on stdout.
//!
//! Exit codes: 0 on success, 1 on a numerical failure or a verdict
//! failure under `--expect-analytic`, 2 on usage or parse errors.
//!
//! Reports are deterministic: floats are printed with 17 significant
//! digits and `wall_time_ms` stays 0 unless `--timing` is passed, so
//! repeat runs with identical flags produce byte-identical output.

use std::io::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{self, PolarDisk};
use crate::contour::{
    line_integral, morera_scan, path_independence_check, Curve, IntegrationOptions,
};
use crate::diff::{self, Rect, ANALYTIC_TOL_FACTOR};
use crate::expr::{self, Expression, PolarPoint};
use crate::geometry::{self, BetaProfile, NetOptions};
use crate::mellin;
use crate::render;

const GRAMMAR_HELP: &str = "\
expression grammar:
  expr   := term ((\"+\" | \"-\") term)*
  term   := factor ((\"*\" | \"/\") factor)*
  factor := unary (\"^\" factor)?            (right-associative)
  unary  := \"-\" unary | atom
  atom   := NUMBER | \"i\" | \"r\" | \"theta\" | \"x\" | \"z\" | \"L\"
          | IDENT \"(\" expr \")\" | \"(\" expr \")\"
  IDENT  := exp | log | sin | cos | sinh | cosh
  z expands to r*exp(i*theta); L expands to log(r) + i*theta.

curve mini-language:
  segment(r1,th1,r2,th2) | rect(a,b,c,d) | diskboundary(r0,th0,rho)
  | param(R_EXPR; TH_EXPR; t0,t1)   with one-variable expressions in t
  A + B concatenates; ~A reverses; parentheses group.";

/// Calculator for polar-analytic function theory on the half-plane r > 0.
#[derive(Debug, Parser)]
#[command(name = "polar-calc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON on stdout (the default and only output format).
    #[arg(long, global = true)]
    json: bool,
    /// Report measured wall time instead of 0 (breaks byte-for-byte
    /// reproducibility of the output).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Clone, Copy)]
struct PointArg(PolarPoint);

fn parse_point(s: &str) -> Result<PointArg, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected `r,theta`, got `{s}`"));
    }
    let r: f64 = parts[0].trim().parse().map_err(|_| format!("bad r value `{}`", parts[0]))?;
    let theta: f64 =
        parts[1].trim().parse().map_err(|_| format!("bad theta value `{}`", parts[1]))?;
    PolarPoint::try_new(r, theta)
        .map(PointArg)
        .ok_or_else(|| format!("point ({r}, {theta}) is not in H (needs finite r > 0)"))
}

#[derive(Debug, Clone, Copy)]
struct RectArg(Rect);

fn parse_rect(s: &str) -> Result<RectArg, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected `a,b,c,d`, got `{s}`"));
    }
    let mut v = [0.0f64; 4];
    for (slot, text) in v.iter_mut().zip(&parts) {
        *slot = text.trim().parse().map_err(|_| format!("bad number `{text}`"))?;
    }
    Rect::new(v[0], v[1], v[2], v[3]).map(RectArg).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy)]
struct GridArg(usize, usize);

fn parse_grid(s: &str) -> Result<GridArg, String> {
    let parts: Vec<&str> = s.split(['x', 'X']).collect();
    if parts.len() != 2 {
        return Err(format!("expected `MxN`, got `{s}`"));
    }
    let m: usize = parts[0].trim().parse().map_err(|_| format!("bad grid count `{}`", parts[0]))?;
    let n: usize = parts[1].trim().parse().map_err(|_| format!("bad grid count `{}`", parts[1]))?;
    if m == 0 || n == 0 {
        return Err("grid counts must be positive".to_string());
    }
    Ok(GridArg(m, n))
}

#[derive(Debug, Clone)]
struct FloatList(Vec<f64>);

fn parse_float_list(s: &str) -> Result<FloatList, String> {
    s.split(',')
        .map(|part| part.trim().parse::<f64>().map_err(|_| format!("bad number `{part}`")))
        .collect::<Result<Vec<f64>, String>>()
        .map(FloatList)
}

#[derive(Debug, Args)]
struct ExprArg {
    /// Expression in r and theta (z and L are shorthands).
    expr: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression at a point of H.
    Eval {
        #[command(flatten)]
        expr: ExprArg,
        /// Evaluation point as `r,theta`.
        #[arg(long, value_parser = parse_point)]
        at: PointArg,
    },
    /// Scan the polar Cauchy-Riemann residual over a grid.
    CheckCr {
        #[command(flatten)]
        expr: ExprArg,
        /// Region `r_min,r_max,theta_min,theta_max`.
        #[arg(long, value_parser = parse_rect)]
        rect: RectArg,
        /// Grid as `MxN` (nodes per axis, at least 2x2).
        #[arg(long, value_parser = parse_grid, default_value = "33x33")]
        grid: GridArg,
        /// Scale-aware verdict factor.
        #[arg(long, default_value_t = ANALYTIC_TOL_FACTOR)]
        tol: f64,
        /// Exit with code 1 when the verdict is "inconsistent".
        #[arg(long)]
        expect_analytic: bool,
    },
    /// Polar derivative via both closed forms, plus the residual.
    Dpol {
        #[command(flatten)]
        expr: ExprArg,
        #[arg(long, value_parser = parse_point)]
        at: PointArg,
    },
    /// Taylor expansion around a center, by contour sampling.
    Taylor {
        #[command(flatten)]
        expr: ExprArg,
        #[arg(long, value_parser = parse_point)]
        center: PointArg,
        /// Expansion order K.
        #[arg(long)]
        order: usize,
        /// Requested expansion radius; sampling happens at 0.8× this.
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        /// Sample count override (power of two, at least 4·order).
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Polar-disk boundary points (optionally to SVG/CSV).
    Disk {
        #[arg(long, value_parser = parse_point)]
        center: PointArg,
        #[arg(long)]
        radius: f64,
        /// Boundary points to emit.
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long)]
        svg: Option<String>,
        #[arg(long)]
        csv: Option<String>,
    },
    /// Maximal admissible polar-disk radius inside a boundary curve.
    Maxradius {
        #[arg(long, value_parser = parse_point)]
        center: PointArg,
        /// Boundary in the curve mini-language (sampled to a polyline).
        #[arg(long)]
        curve: String,
    },
    /// Line integral of f·e^{iθ}(dr + ir·dθ) along a curve.
    Integrate {
        #[command(flatten)]
        expr: ExprArg,
        #[arg(long)]
        curve: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Compare the integral along two curves with shared endpoints.
    PathCheck {
        #[command(flatten)]
        expr: ExprArg,
        /// Pass exactly twice: the two paths to compare.
        #[arg(long, num_args = 1, action = clap::ArgAction::Append)]
        curve: Vec<String>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Exit with code 1 when the verdict is "fail".
        #[arg(long)]
        expect_analytic: bool,
    },
    /// Closed-boundary integrals over every sub-rectangle of a grid.
    Morera {
        #[command(flatten)]
        expr: ExprArg,
        #[arg(long, value_parser = parse_rect)]
        rect: RectArg,
        /// Sub-rectangle grid as `MxN`.
        #[arg(long, value_parser = parse_grid, default_value = "4x4")]
        grid: GridArg,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Exit with code 1 when the verdict is "inconsistent".
        #[arg(long)]
        expect_analytic: bool,
    },
    /// Pre-image angle α and image angle β for two tangent directions.
    Angle {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        r0: f64,
        #[arg(long, allow_negative_numbers = true)]
        phi1: f64,
        #[arg(long, allow_negative_numbers = true)]
        phi2: f64,
    },
    /// Image angle computed through the Jacobi-type matrix of a function;
    /// must match the closed form.
    AngleJac {
        #[command(flatten)]
        expr: ExprArg,
        #[arg(long, value_parser = parse_point)]
        at: PointArg,
        #[arg(long, allow_negative_numbers = true)]
        phi1: f64,
        #[arg(long, allow_negative_numbers = true)]
        phi2: f64,
    },
    /// Classify how β varies with r0 for a direction pair.
    BetaProfile {
        #[arg(long, allow_negative_numbers = true)]
        phi1: f64,
        #[arg(long, allow_negative_numbers = true)]
        phi2: f64,
    },
    /// Map a coordinate net through a function; report orthogonality.
    Net {
        #[command(flatten)]
        expr: ExprArg,
        /// Comma-separated r levels.
        #[arg(long, value_parser = parse_float_list, allow_hyphen_values = true)]
        rlines: FloatList,
        /// Comma-separated theta levels.
        #[arg(long, value_parser = parse_float_list, allow_hyphen_values = true)]
        thetalines: FloatList,
        #[arg(long, default_value_t = 128)]
        samples: usize,
        #[arg(long)]
        svg: Option<String>,
        #[arg(long)]
        csv: Option<String>,
    },
    /// Mellin derivative Θ_c f(x) = x·f'(x) + c·f(x) on x > 0.
    Mellin {
        /// One-variable expression in x.
        expr: String,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        c: f64,
        /// Evaluation point on the positive real axis.
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Mellin polar-derivative Θ̃_c f = re^{iθ}·D_pol f + c·f, or its
    /// Θ̃₀ iterates with --k.
    ThetaPol {
        #[command(flatten)]
        expr: ExprArg,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, value_parser = parse_point)]
        at: PointArg,
        /// Iterate count k (requires c = 0 unless k = 1).
        #[arg(long)]
        k: Option<usize>,
    },
}

/// The single JSON document every subcommand prints.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub diagnostics: Vec<String>,
    pub wall_time_ms: u64,
}

enum CliError {
    /// Bad input: mis-parsed expression, curve, or flag combination.
    Usage(String),
    /// The computation itself failed.
    Numerical(String),
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }
    fn numerical(e: impl std::fmt::Display) -> Self {
        CliError::Numerical(e.to_string())
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 2 on usage errors and 0 for --help/--version.
        Err(e) => e.exit(),
    };
    let started = Instant::now();
    match execute(&cli.command) {
        Ok(Execution { mut report, verdict_failed }) => {
            if cli.timing {
                report.wall_time_ms = started.elapsed().as_millis() as u64;
            }
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(to_json_17(&report).as_bytes());
            let _ = stdout.write_all(b"\n");
            if verdict_failed {
                1
            } else {
                0
            }
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            eprintln!("{GRAMMAR_HELP}");
            2
        }
        Err(CliError::Numerical(message)) => {
            eprintln!("error: {message}");
            1
        }
    }
}

struct Execution {
    report: RunReport,
    verdict_failed: bool,
}

impl Execution {
    fn ok(report: RunReport) -> Result<Execution, CliError> {
        Ok(Execution { report, verdict_failed: false })
    }
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn point_json(p: PolarPoint) -> Value {
    json!({"r": p.r, "theta": p.theta})
}

fn parse_expr(source: &str) -> Result<Expression, CliError> {
    expr::parse(source).map_err(CliError::usage)
}

fn parse_curve(source: &str) -> Result<Curve, CliError> {
    Curve::parse(source).map_err(CliError::usage)
}

fn report(command: &str, inputs: Value, outputs: Value, diagnostics: Vec<String>) -> RunReport {
    RunReport {
        command: command.to_string(),
        inputs,
        outputs,
        diagnostics,
        wall_time_ms: 0,
    }
}

fn execute(command: &Command) -> Result<Execution, CliError> {
    match command {
        Command::Eval { expr, at } => {
            let tree = parse_expr(&expr.expr)?;
            let value = expr::eval(&tree, at.0).map_err(CliError::numerical)?;
            Execution::ok(report(
                "eval",
                json!({"expr": expr.expr, "at": point_json(at.0)}),
                json!({"value": complex_json(value)}),
                vec![],
            ))
        }

        Command::CheckCr { expr, rect, grid, tol, expect_analytic } => {
            let tree = parse_expr(&expr.expr)?;
            let summary = diff::check_cr_grid(&tree, rect.0, grid.0, grid.1);
            let consistent = summary.consistent(*tol);
            let outputs = json!({
                "max_residual": summary.peak.map(|p| p.value),
                "argmax": summary.peak.map(|p| point_json(p.at)),
                "max_scaled_residual": summary.peak_scaled.map(|p| p.value),
                "scaled_argmax": summary.peak_scaled.map(|p| point_json(p.at)),
                "verdict": if consistent { "consistent" } else { "inconsistent" },
                "failures": summary.failures.iter()
                    .map(|(p, e)| json!({"r": p.r, "theta": p.theta, "error": e.to_string()}))
                    .collect::<Vec<_>>(),
            });
            let inputs = json!({
                "expr": expr.expr,
                "rect": [rect.0.r_min, rect.0.r_max, rect.0.theta_min, rect.0.theta_max],
                "grid": [grid.0, grid.1],
                "tol": tol,
            });
            Ok(Execution {
                report: report("check-cr", inputs, outputs, vec![]),
                verdict_failed: *expect_analytic && !consistent,
            })
        }

        Command::Dpol { expr, at } => {
            let tree = parse_expr(&expr.expr)?;
            let d = diff::derivative_report(&tree, at.0).map_err(CliError::numerical)?;
            Execution::ok(report(
                "dpol",
                json!({"expr": expr.expr, "at": point_json(at.0)}),
                json!({
                    "value": complex_json(d.dpol_via_r),
                    "via_theta": complex_json(d.dpol_via_theta),
                    "cr_residual": complex_json(d.cr_residual),
                    "f_value": complex_json(d.value),
                }),
                vec![],
            ))
        }

        Command::Taylor { expr, center, order, radius, samples } => {
            let tree = parse_expr(&expr.expr)?;
            if !(*radius > 0.0 && radius.is_finite()) {
                return Err(CliError::Usage(format!("bad expansion radius {radius}")));
            }
            let rho_sample = analysis::DEFAULT_SAMPLE_RADIUS_FACTOR * radius;
            let n = samples.unwrap_or_else(|| analysis::default_sample_count(*order));
            let expansion = analysis::taylor(&tree, center.0, *order, rho_sample, n)
                .map_err(CliError::numerical)?;
            let outputs = serde_json::to_value(&expansion)
                .map_err(|e| CliError::Numerical(e.to_string()))?;
            Execution::ok(report(
                "taylor",
                json!({
                    "expr": expr.expr,
                    "center": point_json(center.0),
                    "order": order,
                    "radius": radius,
                    "samples": n,
                }),
                outputs,
                vec![],
            ))
        }

        Command::Disk { center, radius, samples, svg, csv } => {
            let disk = PolarDisk::new(center.0, *radius).map_err(CliError::usage)?;
            if *samples < 8 {
                return Err(CliError::Usage("disk boundary needs at least 8 samples".into()));
            }
            let boundary = disk.boundary(*samples);
            let mut diagnostics = Vec::new();
            let mut outputs = json!({
                "center": point_json(center.0),
                "radius": radius,
                "boundary": boundary.iter().map(|p| point_json(*p)).collect::<Vec<_>>(),
            });
            if let Some(path) = svg {
                write_file(path, &render::disk_boundary_to_svg(&boundary))?;
                outputs["svg_path"] = json!(path);
                diagnostics.push(format!("wrote SVG to {path}"));
            }
            if let Some(path) = csv {
                write_file(path, &render::disk_boundary_to_csv(&boundary))?;
                outputs["csv_path"] = json!(path);
                diagnostics.push(format!("wrote CSV to {path}"));
            }
            Execution::ok(report(
                "disk",
                json!({"center": point_json(center.0), "radius": radius, "samples": samples}),
                outputs,
                diagnostics,
            ))
        }

        Command::Maxradius { center, curve } => {
            let boundary_curve = parse_curve(curve)?;
            let polyline = boundary_curve.sample(257);
            let rho =
                analysis::max_radius(center.0, &polyline).map_err(CliError::numerical)?;
            Execution::ok(report(
                "maxradius",
                json!({"center": point_json(center.0), "curve": curve}),
                json!({"rho_max": rho}),
                boundary_curve.warnings().to_vec(),
            ))
        }

        Command::Integrate { expr, curve, tol } => {
            let tree = parse_expr(&expr.expr)?;
            let gamma = parse_curve(curve)?;
            let opts = IntegrationOptions::with_tolerance(*tol);
            let result = line_integral(&tree, &gamma, &opts).map_err(CliError::numerical)?;
            Execution::ok(report(
                "integrate",
                json!({"expr": expr.expr, "curve": curve, "tol": tol}),
                json!({
                    "value": complex_json(result.value),
                    "error_estimate": result.error_estimate,
                    "evaluations": result.evaluations,
                }),
                gamma.warnings().to_vec(),
            ))
        }

        Command::PathCheck { expr, curve, tol, expect_analytic } => {
            if curve.len() != 2 {
                return Err(CliError::Usage(format!(
                    "path-check needs --curve exactly twice (got {})",
                    curve.len()
                )));
            }
            let tree = parse_expr(&expr.expr)?;
            let gamma_1 = parse_curve(&curve[0])?;
            let gamma_2 = parse_curve(&curve[1])?;
            let opts = IntegrationOptions::with_tolerance(*tol);
            let check = path_independence_check(&tree, &gamma_1, &gamma_2, &opts)
                .map_err(CliError::numerical)?;
            let outputs = json!({
                "i1": complex_json(check.integral_1.value),
                "i2": complex_json(check.integral_2.value),
                "difference": check.difference,
                "threshold": check.threshold,
                "verdict": if check.pass { "pass" } else { "fail" },
            });
            Ok(Execution {
                report: report(
                    "path-check",
                    json!({"expr": expr.expr, "curves": [curve[0], curve[1]], "tol": tol}),
                    outputs,
                    vec![],
                ),
                verdict_failed: *expect_analytic && !check.pass,
            })
        }

        Command::Morera { expr, rect, grid, tol, expect_analytic } => {
            let tree = parse_expr(&expr.expr)?;
            let opts = IntegrationOptions::with_tolerance(*tol);
            let scan = morera_scan(&tree, rect.0, grid.0, grid.1, &opts);
            let outputs = json!({
                "max_loop": scan.peak.map(|p| p.value),
                "argmax": scan.peak.map(|p| json!({
                    "grid_index": [p.grid_index.0, p.grid_index.1],
                    "rect": [p.rect.r_min, p.rect.r_max, p.rect.theta_min, p.rect.theta_max],
                })),
                "scale": scan.scale,
                "threshold": scan.threshold,
                "verdict": if scan.consistent { "consistent" } else { "inconsistent" },
                "skipped": scan.skipped.iter()
                    .map(|((i, j), e)| json!({"grid_index": [i, j], "error": e}))
                    .collect::<Vec<_>>(),
                "evaluations": scan.evaluations,
            });
            let inputs = json!({
                "expr": expr.expr,
                "rect": [rect.0.r_min, rect.0.r_max, rect.0.theta_min, rect.0.theta_max],
                "grid": [grid.0, grid.1],
                "tol": tol,
            });
            Ok(Execution {
                report: report("morera", inputs, outputs, vec![]),
                verdict_failed: *expect_analytic && !scan.consistent,
            })
        }

        Command::Angle { r0, phi1, phi2 } => {
            if !(*r0 > 0.0 && r0.is_finite()) {
                return Err(CliError::Usage(format!("--r0 must be positive (got {r0})")));
            }
            let angles = geometry::AngleReport::compute(*r0, *phi1, *phi2);
            Execution::ok(report(
                "angle",
                json!({"r0": r0, "phi1": phi1, "phi2": phi2}),
                json!({"alpha": angles.alpha, "beta": angles.beta}),
                vec![],
            ))
        }

        Command::AngleJac { expr, at, phi1, phi2 } => {
            let tree = parse_expr(&expr.expr)?;
            let via_jacobian = geometry::angle_beta_via_jacobian(&tree, at.0, *phi1, *phi2)
                .map_err(CliError::numerical)?;
            let closed_form = geometry::angle_beta(at.0.r, *phi1, *phi2);
            Execution::ok(report(
                "angle-jac",
                json!({"expr": expr.expr, "at": point_json(at.0), "phi1": phi1, "phi2": phi2}),
                json!({
                    "beta_via_jacobian": via_jacobian,
                    "beta_closed_form": closed_form,
                    "difference": (via_jacobian - closed_form).abs(),
                }),
                vec![],
            ))
        }

        Command::BetaProfile { phi1, phi2 } => {
            let profile =
                geometry::beta_profile_from_angles(*phi1, *phi2).map_err(CliError::usage)?;
            let outputs = match profile {
                BetaProfile::Constant => json!({
                    "classification": "constant",
                    "beta": 0.0,
                }),
                BetaProfile::Monotone { beta_limit_at_zero, beta_limit_at_infinity } => json!({
                    "classification": "monotone",
                    "beta_limit_at_zero": beta_limit_at_zero,
                    "beta_limit_at_infinity": beta_limit_at_infinity,
                }),
                BetaProfile::MinCosAt { r0_star } => json!({
                    "classification": "min-of-cos",
                    "r0_star": r0_star,
                }),
            };
            Execution::ok(report(
                "beta-profile",
                json!({"phi1": phi1, "phi2": phi2}),
                outputs,
                vec![],
            ))
        }

        Command::Net { expr, rlines, thetalines, samples, svg, csv } => {
            let tree = parse_expr(&expr.expr)?;
            let opts = NetOptions { samples_per_curve: *samples, ..Default::default() };
            let net = geometry::map_net(&tree, &rlines.0, &thetalines.0, &opts)
                .map_err(CliError::numerical)?;
            let mut diagnostics = net.failures.clone();
            let max_inner = net
                .intersections
                .iter()
                .filter(|i| i.dpol_nonzero && i.normalized_inner.is_finite())
                .map(|i| i.normalized_inner.abs())
                .fold(0.0f64, f64::max);
            let mut outputs = json!({
                "curves": net.curves.len(),
                "intersections": net.intersections.iter().map(|i| json!({
                    "r": i.at.r,
                    "theta": i.at.theta,
                    "image": complex_json(i.image),
                    "normalized_inner": i.normalized_inner,
                    "dpol_nonzero": i.dpol_nonzero,
                })).collect::<Vec<_>>(),
                "max_abs_normalized_inner": max_inner,
            });
            if let Some(path) = svg {
                write_file(path, &render::net_to_svg(&net))?;
                outputs["svg_path"] = json!(path);
                diagnostics.push(format!("wrote SVG to {path}"));
            }
            if let Some(path) = csv {
                write_file(path, &render::net_to_csv(&net))?;
                outputs["csv_path"] = json!(path);
                diagnostics.push(format!("wrote CSV to {path}"));
            }
            Execution::ok(report(
                "net",
                json!({
                    "expr": expr.expr,
                    "rlines": rlines.0,
                    "thetalines": thetalines.0,
                    "samples": samples,
                }),
                outputs,
                diagnostics,
            ))
        }

        Command::Mellin { expr, c, x } => {
            let tree = expr::parse_one_var(expr).map_err(CliError::usage)?;
            let value = mellin::mellin_derivative(&tree, *c, *x).map_err(CliError::numerical)?;
            Execution::ok(report(
                "mellin",
                json!({"expr": expr, "c": c, "x": x}),
                json!({"value": complex_json(value)}),
                vec![],
            ))
        }

        Command::ThetaPol { expr, c, at, k } => {
            let tree = parse_expr(&expr.expr)?;
            let value = match k {
                None => mellin::mellin_polar_derivative(&tree, *c, at.0)
                    .map_err(CliError::numerical)?,
                Some(1) => mellin::mellin_polar_derivative(&tree, *c, at.0)
                    .map_err(CliError::numerical)?,
                Some(k) => {
                    if *c != 0.0 {
                        return Err(CliError::Usage(format!(
                            "--k {k} computes Θ̃₀ iterates; it requires c = 0 (got {c})"
                        )));
                    }
                    mellin::iterated_theta0(&tree, at.0, *k).map_err(CliError::numerical)?
                }
            };
            Execution::ok(report(
                "theta-pol",
                json!({"expr": expr.expr, "c": c, "at": point_json(at.0), "k": k}),
                json!({"value": complex_json(value)}),
                vec![],
            ))
        }
    }
}

fn write_file(path: &str, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Numerical(format!("could not write {path}: {e}")))
}

// ---------------------------------------------------------------------------
// JSON with 17 significant digits
// ---------------------------------------------------------------------------

/// serde_json formatter printing every float with 17 significant digits
/// (scientific notation), enough to round-trip any f64 exactly.
struct SigDigits17;

impl serde_json::ser::Formatter for SigDigits17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes a report to a single JSON line with deterministic float
/// formatting.
pub fn to_json_17<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigDigits17);
    value.serialize(&mut ser).expect("report serialization cannot fail");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}
