//! The acceptance suite: one test per verification criterion, each
//! printing a PASS/FAIL line (visible with `--nocapture`). Run with
//!
//! ```text
//! cargo test --test acceptance -- --nocapture
//! ```

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use polar_analytic::analysis::{max_radius, sin_alternative_expansion, taylor, PolarDisk};
use polar_analytic::catalog::{non_analytic_witnesses, polar_analytic_catalog};
use polar_analytic::contour::{
    line_integral, morera_scan, path_independence_check, Curve, IntegrationOptions, Piece,
};
use polar_analytic::diff::{check_cr_grid, dpol, Rect};
use polar_analytic::expr::{eval, parse, Expression, PolarPoint};
use polar_analytic::geometry::{
    angle_alpha, angle_beta, angle_beta_via_jacobian, beta_profile_from_angles, map_net,
    BetaProfile, NetOptions,
};
use polar_analytic::mellin::{iterated_theta0, mellin_derivative, mellin_polar_derivative};

const PI: f64 = std::f64::consts::PI;

fn pt(r: f64, theta: f64) -> PolarPoint {
    PolarPoint::new(r, theta)
}

fn report(number: u8, name: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("acceptance {number:02} {name}: PASS");
    } else {
        println!("acceptance {number:02} {name}: FAIL ({} problems)", failures.len());
        for f in &failures {
            println!("  - {f}");
        }
        panic!("acceptance criterion {number:02} ({name}) failed");
    }
}

fn check(failures: &mut Vec<String>, ok: bool, message: impl FnOnce() -> String) {
    if !ok {
        failures.push(message());
    }
}

// --------------------------------------------------------------------------
// 1. Polar Cauchy-Riemann residuals on a grid
// --------------------------------------------------------------------------

#[test]
fn criterion_01_cauchy_riemann_grid() {
    let mut failures = Vec::new();
    let region = Rect::new(0.5, 2.0, -2.0, 2.0).unwrap();
    for f in polar_analytic_catalog() {
        let summary = check_cr_grid(&f.expr, region, 33, 33);
        let peak = summary.peak.expect("catalog functions evaluate everywhere");
        check(&mut failures, summary.failures.is_empty(), || {
            format!("{}: unexpected evaluation failures", f.name)
        });
        check(&mut failures, peak.value <= 1e-8, || {
            format!("{}: max residual {:.3e} > 1e-8 at {}", f.name, peak.value, peak.at)
        });
    }
    for (name, witness) in non_analytic_witnesses() {
        let summary = check_cr_grid(&witness, region, 33, 33);
        let peak = summary.peak.unwrap();
        check(&mut failures, peak.value > 0.1, || {
            format!("{name}: residual {:.3e} should exceed 0.1 somewhere", peak.value)
        });
    }
    report(1, "polar Cauchy-Riemann residuals", failures);
}

// --------------------------------------------------------------------------
// 2. Closed forms of the polar derivative
// --------------------------------------------------------------------------

#[test]
fn criterion_02_polar_derivative_closed_forms() {
    let mut failures = Vec::new();

    let big_l = parse("L").unwrap();
    let at_unit = dpol(&big_l, pt(1.0, 0.0)).unwrap();
    check(&mut failures, (at_unit - Complex64::new(1.0, 0.0)).norm() <= 1e-12, || {
        format!("D_pol L at (1,0) = {at_unit}, expected 1")
    });

    let mut rng = ChaCha8Rng::seed_from_u64(2001);
    let powers: [(f64, Expression); 3] = [
        (0.5, parse("r^0.5*exp(i*0.5*theta)").unwrap()),
        (2.0, parse("z^2").unwrap()),
        (3.0, parse("z^3").unwrap()),
    ];
    for (a, tree) in &powers {
        for _ in 0..20 {
            let p = pt(rng.gen_range(0.5..2.5), rng.gen_range(-2.0..2.0));
            let computed = dpol(tree, p).unwrap();
            let expected = a * Complex64::from_polar(p.r.powf(a - 1.0), (a - 1.0) * p.theta);
            let relative = (computed - expected).norm() / expected.norm();
            check(&mut failures, relative <= 1e-9, || {
                format!("z^{a} at {p}: relative error {relative:.3e}")
            });
        }
    }

    let sine = parse("sin(z)").unwrap();
    for _ in 0..20 {
        let p = pt(rng.gen_range(0.5..2.5), rng.gen_range(-2.0..2.0));
        let computed = dpol(&sine, p).unwrap();
        let expected = p.to_complex().cos();
        let relative = (computed - expected).norm() / expected.norm().max(1e-300);
        check(&mut failures, relative <= 1e-9, || {
            format!("sin z at {p}: relative error {relative:.3e}")
        });
    }

    report(2, "polar derivative closed forms", failures);
}

// --------------------------------------------------------------------------
// 3. Closed-curve integrals vanish; integrals are path-independent
// --------------------------------------------------------------------------

fn closed_test_curves() -> Vec<Curve> {
    let rects = [
        Rect::new(0.5, 1.5, -0.5, 0.5).unwrap(),
        Rect::new(1.0, 2.0, 0.0, 1.0).unwrap(),
        Rect::new(0.7, 2.5, -1.0, 0.3).unwrap(),
        Rect::new(1.0, 1.2, -2.0, 2.0).unwrap(),
    ];
    let disks = [
        PolarDisk::new(pt(1.0, 0.0), 0.8).unwrap(),
        PolarDisk::new(pt(1.5, 0.5), 1.2).unwrap(),
        PolarDisk::new(pt(0.8, -0.7), 0.5).unwrap(),
    ];
    let mut curves: Vec<Curve> = Vec::new();
    for rect in rects {
        curves.push(Curve::rect_boundary(rect).unwrap());
    }
    for disk in disks {
        curves.push(Curve::disk_boundary(disk).unwrap());
    }
    // Mixed concatenations, closed by construction.
    curves.push(
        Curve::segment(pt(1.0, 0.0), pt(2.0, 0.2))
            .unwrap()
            .concat(Curve::log_spiral(pt(2.0, 0.2), pt(1.5, 1.0)).unwrap())
            .unwrap()
            .concat(Curve::segment(pt(1.5, 1.0), pt(1.0, 0.0)).unwrap())
            .unwrap(),
    );
    curves.push(
        Curve::log_spiral(pt(0.8, -0.5), pt(2.2, 0.5))
            .unwrap()
            .concat(Curve::segment(pt(2.2, 0.5), pt(1.4, 1.2)).unwrap())
            .unwrap()
            .concat(Curve::log_spiral(pt(1.4, 1.2), pt(0.8, -0.5)).unwrap())
            .unwrap(),
    );
    let arch = Curve::from_pieces(vec![Piece::param(
        polar_analytic::expr::parse_one_var_named("1 + 0.5*t", "t").unwrap(),
        polar_analytic::expr::parse_one_var_named("t*(1 - t)", "t").unwrap(),
        0.0,
        1.0,
    )])
    .unwrap();
    curves.push(
        arch.concat(Curve::segment(pt(1.5, 0.0), pt(1.2, 0.6)).unwrap())
            .unwrap()
            .concat(Curve::log_spiral(pt(1.2, 0.6), pt(1.0, 0.0)).unwrap())
            .unwrap(),
    );
    assert_eq!(curves.len(), 10);
    for curve in &curves {
        assert!(curve.is_closed());
    }
    curves
}

#[test]
fn criterion_03_cauchy_analogue() {
    let mut failures = Vec::new();
    let opts = IntegrationOptions::with_tolerance(1e-10);
    let curves = closed_test_curves();
    for f in polar_analytic_catalog() {
        for (i, curve) in curves.iter().enumerate() {
            let result = line_integral(&f.expr, curve, &opts).unwrap();
            let bound = 1e-8 * (1.0 + curve.length() * curve.max_abs_on(&f.expr, 129));
            check(&mut failures, result.value.norm() <= bound, || {
                format!(
                    "{} closed curve {i}: |loop| = {:.3e} > {bound:.3e}",
                    f.name,
                    result.value.norm()
                )
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2003);
    let endpoint_pairs: Vec<(PolarPoint, PolarPoint)> = (0..10)
        .map(|_| {
            (
                pt(rng.gen_range(0.5..3.0), rng.gen_range(-1.5..1.5)),
                pt(rng.gen_range(0.5..3.0), rng.gen_range(-1.5..1.5)),
            )
        })
        .collect();
    for f in polar_analytic_catalog() {
        for (from, to) in &endpoint_pairs {
            let straight = Curve::segment(*from, *to).unwrap();
            let spiral = Curve::log_spiral(*from, *to).unwrap();
            let verdict = path_independence_check(&f.expr, &straight, &spiral, &opts).unwrap();
            check(&mut failures, verdict.pass, || {
                format!(
                    "{} from {from} to {to}: difference {:.3e} > threshold {:.3e}",
                    f.name, verdict.difference, verdict.threshold
                )
            });
        }
    }

    report(3, "Cauchy analogue (closed curves and path independence)", failures);
}

// --------------------------------------------------------------------------
// 4. Morera analogue
// --------------------------------------------------------------------------

#[test]
fn criterion_04_morera_analogue() {
    let mut failures = Vec::new();
    let region = Rect::new(1.0, 2.0, 0.0, 1.0).unwrap();
    let opts = IntegrationOptions::with_tolerance(1e-8);
    for f in polar_analytic_catalog() {
        let scan = morera_scan(&f.expr, region, 4, 4, &opts);
        check(&mut failures, scan.consistent && scan.skipped.is_empty(), || {
            format!(
                "{}: expected consistent verdict, max loop {:?}",
                f.name,
                scan.peak.map(|p| p.value)
            )
        });
    }
    let scan = morera_scan(&parse("r").unwrap(), region, 4, 4, &opts);
    let peak = scan.peak.unwrap();
    check(&mut failures, !scan.consistent && peak.value > 0.1, || {
        format!("f = r: expected inconsistent with max loop > 0.1, got {:.3e}", peak.value)
    });
    report(4, "Morera analogue (rectangle scans)", failures);
}

// --------------------------------------------------------------------------
// 5. Taylor expansions by contour sampling
// --------------------------------------------------------------------------

#[test]
fn criterion_05_taylor_expansion() {
    let mut failures = Vec::new();
    let center = pt(1.0, 0.0);
    let sine = parse("sin(z)").unwrap();
    let expansion = taylor(&sine, center, 24, 1.0, 256).unwrap();

    let mut rng = ChaCha8Rng::seed_from_u64(2005);
    for _ in 0..50 {
        // Uniform over the polar-disk E((1,0), 0.8) in log coordinates.
        let radius = 0.8 * rng.gen_range(0.0f64..1.0).sqrt();
        let angle = rng.gen_range(0.0..2.0 * PI);
        let p = pt((radius * angle.cos()).exp(), radius * angle.sin());
        let series = expansion.eval(p);
        let direct = eval(&sine, p).unwrap();
        let oracle = sin_alternative_expansion(p, 24);
        check(&mut failures, (series - direct).norm() <= 1e-8, || {
            format!("sin z at {p}: series vs direct gap {:.3e}", (series - direct).norm())
        });
        check(&mut failures, (series - oracle).norm() <= 1e-8, || {
            format!("sin z at {p}: series vs power-series oracle gap {:.3e}", (series - oracle).norm())
        });
    }

    for f in polar_analytic_catalog() {
        let t = taylor(&f.expr, center, 8, 0.5, 256).unwrap();
        let value = eval(&f.expr, center).unwrap();
        let theta0 = center.to_complex() * dpol(&f.expr, center).unwrap();
        check(
            &mut failures,
            (t.coefficients[0] - value).norm() <= 1e-8 * (1.0 + value.norm()),
            || format!("{}: a0 {} vs f(center) {}", f.name, t.coefficients[0], value),
        );
        check(
            &mut failures,
            (t.coefficients[1] - theta0).norm() <= 1e-8 * (1.0 + theta0.norm()),
            || format!("{}: a1 {} vs theta-derivative {}", f.name, t.coefficients[1], theta0),
        );

        let doubled = taylor(&f.expr, center, 8, 0.5, 512).unwrap();
        for (k, (a, b)) in t.coefficients.iter().zip(&doubled.coefficients).enumerate() {
            check(&mut failures, (a - b).norm() <= 1e-10 * (1.0 + a.norm()), || {
                format!("{} a{k}: N=256 vs N=512 gap {:.3e}", f.name, (a - b).norm())
            });
        }
    }

    report(5, "Taylor expansion by contour sampling", failures);
}

// --------------------------------------------------------------------------
// 6. Polar-disk geometry
// --------------------------------------------------------------------------

#[test]
fn criterion_06_polar_disk_geometry() {
    let mut failures = Vec::new();
    for (center, rho) in [
        (pt(1.0, 0.0), 1.0),
        (pt(2.5, -1.2), 0.4),
        (pt(0.3, 4.0), 2.0),
        (pt(1.7, 0.1), 3.0),
    ] {
        let disk = PolarDisk::new(center, rho).unwrap();
        for p in disk.boundary(257) {
            let dx = (p.r / center.r).ln();
            let dy = p.theta - center.theta;
            let defect = (dx * dx + dy * dy - rho * rho).abs();
            check(&mut failures, defect <= 1e-12, || {
                format!("boundary point {p} of E({center}, {rho}): defect {defect:.3e}")
            });
        }
    }

    let far = 12.0_f64;
    let strip = [
        pt((-far).exp(), -1.0),
        pt(far.exp(), -1.0),
        pt(far.exp(), 1.0),
        pt((-far).exp(), 1.0),
    ];
    for r0 in [0.5, 1.0, 3.0] {
        let rho = max_radius(pt(r0, 0.0), &strip).unwrap();
        check(&mut failures, (rho - 1.0).abs() <= 1e-12, || {
            format!("strip radius at r0 = {r0}: {rho}")
        });
    }

    report(6, "polar-disk geometry", failures);
}

// --------------------------------------------------------------------------
// 7. Angle geometry
// --------------------------------------------------------------------------

#[test]
fn criterion_07_angle_geometry() {
    let mut failures = Vec::new();

    let mut rng = ChaCha8Rng::seed_from_u64(2007);
    for _ in 0..100 {
        let phi1 = rng.gen_range(-1.5..1.5);
        let phi2 = rng.gen_range(-1.5..1.5);
        let alpha = angle_alpha(phi1, phi2);
        let beta = angle_beta(1.0, phi1, phi2);
        check(&mut failures, (alpha - beta).abs() <= 1e-12, || {
            format!("conformality at r0=1 for ({phi1}, {phi2}): gap {:.3e}", (alpha - beta).abs())
        });
    }

    // φ2 = π/2 in f64 leaves cos(φ2) ≈ 6.1e−17, which bounds the angle
    // defect by ~6.2e−11 at r0 = 1e−6; 1e−8 sits far above that noise
    // and far below any true deviation.
    for r0 in [1e-6, 1.0, 1e6] {
        let beta = angle_beta(r0, 0.0, std::f64::consts::FRAC_PI_2);
        check(&mut failures, (beta - std::f64::consts::FRAC_PI_2).abs() <= 1e-8, || {
            format!("vertical pair at r0 = {r0}: beta = {beta}")
        });
    }

    let five: Vec<_> = polar_analytic_catalog()
        .into_iter()
        .filter(|f| f.name != "exp(-i*theta)/r")
        .collect();
    assert_eq!(five.len(), 5);
    for f in &five {
        for _ in 0..20 {
            let p = pt(rng.gen_range(0.4..2.5), rng.gen_range(0.1..2.0));
            let phi1 = rng.gen_range(-1.5..1.5);
            let phi2 = rng.gen_range(-1.5..1.5);
            let via_jacobian = angle_beta_via_jacobian(&f.expr, p, phi1, phi2).unwrap();
            let closed = angle_beta(p.r, phi1, phi2);
            check(&mut failures, (via_jacobian - closed).abs() <= 1e-10, || {
                format!(
                    "{} at {p} ({phi1:.3}, {phi2:.3}): Jacobian route {via_jacobian} vs closed {closed}",
                    f.name
                )
            });
        }
    }

    let f = parse("exp(z)").unwrap();
    let reference = angle_beta_via_jacobian(&f, pt(1.4, -3.0), 0.5, -0.2).unwrap();
    for k in 0..20 {
        let theta = -3.0 + 6.0 * k as f64 / 19.0;
        let beta = angle_beta_via_jacobian(&f, pt(1.4, theta), 0.5, -0.2).unwrap();
        check(&mut failures, (beta - reference).abs() <= 1e-10, || {
            format!("theta0-dependence at theta = {theta}: {beta} vs {reference}")
        });
    }

    // Sign classification against a finite-difference scan of cos β on a
    // 60-point log grid.
    for (phi1, phi2) in [(0.4, -1.2), (0.3, 1.2), (1.4, 0.6), (0.0, 0.8), (0.9, 0.9)] {
        let profile = beta_profile_from_angles(phi1, phi2).unwrap();
        let grid: Vec<f64> = (0..60).map(|k| 10f64.powf(-3.0 + 6.0 * k as f64 / 59.0)).collect();
        let cos_values: Vec<f64> =
            grid.iter().map(|&r0| angle_beta(r0, phi1, phi2).cos()).collect();
        for w in 0..grid.len() - 1 {
            let diff = cos_values[w + 1] - cos_values[w];
            let ok = match profile {
                BetaProfile::Constant => diff.abs() <= 1e-14,
                BetaProfile::Monotone { .. } => diff <= 1e-14,
                BetaProfile::MinCosAt { r0_star } => {
                    if grid[w + 1] < r0_star {
                        diff <= 1e-14
                    } else if grid[w] > r0_star {
                        diff >= -1e-14
                    } else {
                        true
                    }
                }
            };
            check(&mut failures, ok, || {
                format!(
                    "profile ({phi1}, {phi2}) at r0 = {:.4}: diff {diff:.3e} contradicts {profile:?}",
                    grid[w]
                )
            });
        }
    }

    report(7, "angle geometry", failures);
}

// --------------------------------------------------------------------------
// 8. Orthogonal nets
// --------------------------------------------------------------------------

fn wrap_angle(mut a: f64) -> f64 {
    while a > PI {
        a -= 2.0 * PI;
    }
    while a < -PI {
        a += 2.0 * PI;
    }
    a
}

#[test]
fn criterion_08_orthogonal_nets() {
    let mut failures = Vec::new();
    let reciprocal = parse("exp(-i*theta)/r").unwrap();
    let net = map_net(&reciprocal, &[0.5, 2.0, 3.0], &[-1.0, 0.4, 1.0], &NetOptions::default())
        .unwrap();
    for curve in &net.curves {
        if curve.is_r_line {
            for s in &curve.samples {
                check(&mut failures, (s.w.norm() - 1.0 / curve.level).abs() <= 1e-12, || {
                    format!("r = {}: |w| = {} off the circle", curve.level, s.w.norm())
                });
            }
        } else {
            for s in &curve.samples {
                let defect = wrap_angle(s.w.arg() + curve.level).abs();
                check(&mut failures, defect <= 1e-12, || {
                    format!("theta = {}: arg defect {defect:.3e}", curve.level)
                });
            }
        }
    }

    for source in ["sin(z)", "z^2", "exp(-i*theta)/r"] {
        let f = parse(source).unwrap();
        let image = map_net(&f, &[0.75, 1.25, 2.0], &[-0.8, 0.3, 1.1], &NetOptions::default())
            .unwrap();
        check(&mut failures, image.failures.is_empty(), || {
            format!("{source}: unexpected evaluation failures")
        });
        for crossing in &image.intersections {
            check(&mut failures, crossing.dpol_nonzero, || {
                format!("{source} at {}: polar derivative vanished", crossing.at)
            });
            check(&mut failures, crossing.normalized_inner.abs() <= 1e-6, || {
                format!(
                    "{source} at {}: tangent inner product {:.3e}",
                    crossing.at, crossing.normalized_inner
                )
            });
        }
    }

    report(8, "orthogonal net mapping", failures);
}

// --------------------------------------------------------------------------
// 9. Mellin derivatives
// --------------------------------------------------------------------------

#[test]
fn criterion_09_mellin_derivatives() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2009);
    for f in polar_analytic_catalog() {
        let phi = f.expr.restrict_to_positive_axis();
        for c in [0.0, 1.0, -2.5] {
            for _ in 0..50 {
                let r = rng.gen_range(0.2..4.0);
                let polar = mellin_polar_derivative(&f.expr, c, pt(r, 0.0)).unwrap();
                let axis = mellin_derivative(&phi, c, r).unwrap();
                let scale = 1.0 + axis.norm();
                check(&mut failures, (polar - axis).norm() <= 1e-10 * scale, || {
                    format!(
                        "{} c={c} r={r:.4}: restriction gap {:.3e}",
                        f.name,
                        (polar - axis).norm()
                    )
                });
            }
        }
    }

    let center = pt(1.0, 0.0);
    for f in polar_analytic_catalog() {
        let expansion = taylor(&f.expr, center, 4, 0.8, 256).unwrap();
        let mut factorial = 1.0_f64;
        for k in 0..=4usize {
            if k > 0 {
                factorial *= k as f64;
            }
            let iterate = iterated_theta0(&f.expr, center, k).unwrap();
            let scaled = factorial * expansion.coefficients[k];
            check(
                &mut failures,
                (iterate - scaled).norm() <= 1e-7 * (1.0 + scaled.norm()),
                || format!("{} k={k}: iterate {iterate} vs k!·a_k {scaled}", f.name),
            );
        }
    }

    report(9, "Mellin derivatives", failures);
}

// --------------------------------------------------------------------------
// 10. Plumbing: round-trips, the curve language, CLI determinism
// --------------------------------------------------------------------------

fn random_tree(rng: &mut ChaCha8Rng, depth: usize) -> Expression {
    use Expression::*;
    if depth == 0 || rng.gen_bool(0.35) {
        return match rng.gen_range(0..5) {
            0 => Const(Complex64::new(rng.gen_range(0..100_000) as f64 / 100.0, 0.0)),
            1 => Const(Complex64::new(0.0, 1.0)),
            2 => Const(Complex64::new(rng.gen::<f64>() * 10.0, 0.0)),
            3 => VarR,
            _ => VarTheta,
        };
    }
    let child = |rng: &mut ChaCha8Rng| Box::new(random_tree(rng, depth - 1));
    match rng.gen_range(0..12) {
        0 => Add(child(rng), child(rng)),
        1 => Sub(child(rng), child(rng)),
        2 => Mul(child(rng), child(rng)),
        3 => Div(child(rng), child(rng)),
        4 => Pow(child(rng), child(rng)),
        5 => Neg(child(rng)),
        6 => Exp(child(rng)),
        7 => Log(child(rng)),
        8 => Sin(child(rng)),
        9 => Cos(child(rng)),
        10 => Sinh(child(rng)),
        _ => Cosh(child(rng)),
    }
}

fn polar_calc(args: &[&str]) -> std::process::Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_polar-calc"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_10_plumbing() {
    let mut failures = Vec::new();

    let mut rng = ChaCha8Rng::seed_from_u64(2010);
    for case in 0..1000 {
        let tree = random_tree(&mut rng, 5);
        let printed = tree.to_string();
        match parse(&printed) {
            Ok(reparsed) => check(&mut failures, reparsed == tree, || {
                format!("round-trip case {case}: `{printed}` reparsed differently")
            }),
            Err(e) => failures.push(format!("round-trip case {case}: `{printed}`: {e}")),
        }
    }

    for source in [
        "segment(1,0,2.718281828459045,0)",
        "rect(1,2,0,1)",
        "diskboundary(1,0,0.5)",
        "param(1+t; t^2; 0, 1)",
        "segment(1,0,2,0) + segment(2,0,2,1)",
        "~segment(1,0,2,1)",
        "~(segment(1,0,2,0) + segment(2,0,2,1))",
        "param(exp(t); sin(t); -1, 1) + segment(2.718281828459045,0.8414709848078965,3,1)",
    ] {
        check(&mut failures, Curve::parse(source).is_ok(), || {
            format!("curve `{source}` failed to parse: {:?}", Curve::parse(source).err())
        });
    }

    let stable_commands: Vec<Vec<&str>> = vec![
        vec!["dpol", "L", "--at", "1,0"],
        vec!["taylor", "sin(z)", "--center", "1,0", "--order", "8"],
        vec!["morera", "L", "--rect", "1,2,0,1", "--grid", "2x2"],
        vec!["angle", "--r0", "2", "--phi1", "0.3", "--phi2", "1.1"],
        vec!["net", "exp(-i*theta)/r", "--rlines", "1,2", "--thetalines", "0,0.5"],
    ];
    for args in &stable_commands {
        let first = polar_calc(args);
        let second = polar_calc(args);
        check(&mut failures, first.status.success() && second.status.success(), || {
            format!("{args:?}: nonzero exit")
        });
        check(&mut failures, first.stdout == second.stdout, || {
            format!("{args:?}: output differs between runs")
        });
    }

    report(10, "plumbing (round-trips, curve language, CLI determinism)", failures);
}
