use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::catalog::{non_analytic_witnesses, polar_analytic_catalog};
use crate::expr::{eval, parse, parse_one_var};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn assert_close(actual: Complex64, expected: Complex64, tol: f64, label: &str) {
    let err = (actual - expected).norm();
    assert!(
        err <= tol,
        "{label}: |{actual} - {expected}| = {err:.3e} > {tol:.1e}"
    );
}

/// Central-difference step balancing truncation and round-off.
fn fd_step(coordinate: f64) -> f64 {
    f64::EPSILON.cbrt() * coordinate.abs().max(1.0)
}

/// Finite-difference partials, the independent oracle for eval_dual.
fn fd_partials(e: &crate::expr::Expression, p: PolarPoint) -> (Complex64, Complex64) {
    let hr = fd_step(p.r);
    let ht = fd_step(p.theta);
    let dr = (eval(e, PolarPoint::new(p.r + hr, p.theta)).unwrap()
        - eval(e, PolarPoint::new(p.r - hr, p.theta)).unwrap())
        / (2.0 * hr);
    let dtheta = (eval(e, PolarPoint::new(p.r, p.theta + ht)).unwrap()
        - eval(e, PolarPoint::new(p.r, p.theta - ht)).unwrap())
        / (2.0 * ht);
    (dr, dtheta)
}

#[test]
fn dual_of_big_l_by_hand() {
    let d = eval_dual(&parse("L").unwrap(), PolarPoint::new(2.0, 1.0)).unwrap();
    assert_close(d.val, c(2.0_f64.ln(), 1.0), 1e-15, "value");
    assert_close(d.dr, c(0.5, 0.0), 1e-15, "dr");
    assert_close(d.dtheta, c(0.0, 1.0), 1e-15, "dtheta");
}

#[test]
fn dual_of_r_squared_rotation_by_hand() {
    // u = r²cos 2θ, v = r²sin 2θ at (1, 0): ∂r = 2, ∂θ = 2i.
    let d = eval_dual(&parse("r^2*exp(i*2*theta)").unwrap(), PolarPoint::new(1.0, 0.0)).unwrap();
    assert_close(d.val, c(1.0, 0.0), 1e-15, "value");
    assert_close(d.dr, c(2.0, 0.0), 1e-14, "dr");
    assert_close(d.dtheta, c(0.0, 2.0), 1e-14, "dtheta");
}

#[test]
fn duals_match_finite_differences_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for f in polar_analytic_catalog() {
        for _ in 0..20 {
            let p = PolarPoint::new(rng.gen_range(0.3..3.0), rng.gen_range(-2.0..2.0));
            let d = eval_dual(&f.expr, p).unwrap();
            let (fd_dr, fd_dtheta) = fd_partials(&f.expr, p);
            let scale_r = 1e-5 * (1.0 + d.dr.norm());
            let scale_t = 1e-5 * (1.0 + d.dtheta.norm());
            assert_close(d.dr, fd_dr, scale_r, &format!("{} dr at {p}", f.name));
            assert_close(d.dtheta, fd_dtheta, scale_t, &format!("{} dtheta at {p}", f.name));
        }
    }
}

#[test]
fn dual_product_and_chain_rules_against_finite_differences() {
    // A deliberately composite expression exercising every rule at once.
    let e = parse("sin(r*theta)/cosh(r) + exp(theta)*log(r + 1)^2").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..50 {
        let p = PolarPoint::new(rng.gen_range(0.3..3.0), rng.gen_range(-1.5..1.5));
        let d = eval_dual(&e, p).unwrap();
        let (fd_dr, fd_dtheta) = fd_partials(&e, p);
        assert_close(d.dr, fd_dr, 1e-5 * (1.0 + d.dr.norm()), "composite dr");
        assert_close(d.dtheta, fd_dtheta, 1e-5 * (1.0 + d.dtheta.norm()), "composite dtheta");
    }
}

#[test]
fn dpol_of_big_l_at_unit_point_is_one() {
    let v = dpol(&parse("L").unwrap(), PolarPoint::new(1.0, 0.0)).unwrap();
    assert_close(v, c(1.0, 0.0), 1e-15, "D_pol L (1,0)");
}

#[test]
fn dpol_of_z_squared_closed_form() {
    // 2z at (2, π/4): 4e^{iπ/4} = 2√2(1 + i).
    let v = dpol(&parse("z^2").unwrap(), PolarPoint::new(2.0, std::f64::consts::FRAC_PI_4))
        .unwrap();
    let expected = c(2.0 * 2.0_f64.sqrt(), 2.0 * 2.0_f64.sqrt());
    assert_close(v, expected, 1e-13, "D_pol z² (2, π/4)");
}

#[test]
fn dpol_of_sin_z_is_cos() {
    let v = dpol(&parse("sin(z)").unwrap(), PolarPoint::new(1.0, 0.0)).unwrap();
    assert_close(v, c(1.0_f64.cos(), 0.0), 1e-14, "D_pol sin z (1,0)");
}

#[test]
fn dpol_matches_catalog_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for f in polar_analytic_catalog() {
        for _ in 0..20 {
            let p = PolarPoint::new(rng.gen_range(0.4..2.5), rng.gen_range(-2.0..2.0));
            let v = dpol(&f.expr, p).unwrap();
            let expected = (f.dpol)(p);
            assert!(
                (v - expected).norm() <= 1e-12 * (1.0 + expected.norm()),
                "{} at {p}: {v} vs {expected}",
                f.name
            );
        }
    }
}

/// The defining limit quotient, approached along 8 directions, as an
/// oracle for the partial-derivative formula.
#[test]
fn dpol_agrees_with_directional_difference_quotients() {
    let step = 1e-6;
    for f in polar_analytic_catalog() {
        let p = PolarPoint::new(1.3, 0.7);
        let d = dpol(&f.expr, p).unwrap();
        let f0 = eval(&f.expr, p).unwrap();
        let z0 = p.to_complex();
        for k in 0..8 {
            let psi = std::f64::consts::PI * k as f64 / 4.0;
            let q = PolarPoint::new(p.r + step * psi.cos(), p.theta + step * psi.sin());
            let quotient = (eval(&f.expr, q).unwrap() - f0) / (q.to_complex() - z0);
            assert!(
                (quotient - d).norm() <= 1e-4 * (1.0 + d.norm()),
                "{} direction {k}: quotient {quotient} vs dpol {d}",
                f.name
            );
        }
    }
}

#[test]
fn dpol_is_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    let f = parse("sin(z)").unwrap();
    let g = parse("L").unwrap();
    for _ in 0..20 {
        let a = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let bb = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let p = PolarPoint::new(rng.gen_range(0.4..2.5), rng.gen_range(-1.5..1.5));
        let combination = crate::expr::Expression::Add(
            Box::new(crate::expr::Expression::Mul(
                Box::new(crate::expr::Expression::Const(a)),
                Box::new(f.clone()),
            )),
            Box::new(crate::expr::Expression::Mul(
                Box::new(crate::expr::Expression::Const(bb)),
                Box::new(g.clone()),
            )),
        );
        let lhs = dpol(&combination, p).unwrap();
        let rhs = a * dpol(&f, p).unwrap() + bb * dpol(&g, p).unwrap();
        assert_close(lhs, rhs, 1e-12 * (1.0 + rhs.norm()), "linearity");
    }
}

#[test]
fn restriction_to_positive_axis_matches_ordinary_derivative() {
    // On θ = 0 the polar derivative is plain differentiation of
    // φ(x) = f(x, 0).
    let cases = [
        ("L", "log(x)"),
        ("z^2", "x^2"),
        ("sin(z)", "sin(x)"),
        ("exp(z)", "exp(x)"),
        ("exp(-i*theta)/r", "1/x"),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    for (polar_src, one_var_src) in cases {
        let f = parse(polar_src).unwrap();
        let phi = parse_one_var(one_var_src).unwrap();
        for _ in 0..10 {
            let r = rng.gen_range(0.3..3.0);
            let lhs = dpol(&f, PolarPoint::new(r, 0.0)).unwrap();
            let rhs = eval_dual_one_var(&phi, r).unwrap().dr;
            assert_close(lhs, rhs, 1e-9 * (1.0 + rhs.norm()), polar_src);
        }
    }
}

#[test]
fn two_forms_of_dpol_agree_for_analytic_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(131);
    for f in polar_analytic_catalog() {
        for _ in 0..100 {
            let p = PolarPoint::new(rng.gen_range(0.3..3.0), rng.gen_range(-2.5..2.5));
            let report = derivative_report(&f.expr, p).unwrap();
            let gap = (report.dpol_via_r - report.dpol_via_theta).norm();
            assert!(
                gap <= 1e-9 * (1.0 + report.dpol_via_r.norm()),
                "{} at {p}: gap {gap:.3e}",
                f.name
            );
        }
    }
}

#[test]
fn cr_residual_values_by_hand() {
    // L satisfies the equations everywhere.
    let big_l = parse("L").unwrap();
    for (r, theta) in [(0.5, -1.0), (1.0, 0.0), (2.0, 3.0), (4.0, -2.5)] {
        let res = cr_residual(&big_l, PolarPoint::new(r, theta)).unwrap();
        assert!(res.norm() <= 1e-12, "L residual at ({r},{theta}) = {res}");
    }
    // f = r: ∂θf = 0, i·r·∂rf = i·r, so the residual is −3i at r = 3.
    let res = cr_residual(&parse("r").unwrap(), PolarPoint::new(3.0, 0.0)).unwrap();
    assert_close(res, c(0.0, -3.0), 1e-15, "residual of r at (3,0)");
    // Constants have vanishing partials.
    let res = cr_residual(&parse("42").unwrap(), PolarPoint::new(0.7, 2.0)).unwrap();
    assert_eq!(res, c(0.0, 0.0));
}

#[test]
fn report_consistency_when_residual_vanishes() {
    let report =
        derivative_report(&parse("exp(z)").unwrap(), PolarPoint::new(1.2, 0.4)).unwrap();
    assert!(report.cr_residual.norm() <= 1e-13);
    assert_close(report.dpol_via_r, report.dpol_via_theta, 1e-13, "two forms");
}

#[test]
fn grid_scan_of_sin_z_is_clean() {
    let region = Rect::new(0.5, 2.0, -1.0, 1.0).unwrap();
    let summary = check_cr_grid(&parse("sin(z)").unwrap(), region, 33, 33);
    assert!(summary.failures.is_empty());
    let peak = summary.peak.unwrap();
    assert!(peak.value <= 1e-10, "max residual {:.3e}", peak.value);
    assert!(summary.consistent(ANALYTIC_TOL_FACTOR));
}

#[test]
fn grid_scan_of_radius_function_peaks_at_far_edge() {
    let region = Rect::new(0.5, 2.0, -1.0, 1.0).unwrap();
    let summary = check_cr_grid(&parse("r").unwrap(), region, 33, 33);
    let peak = summary.peak.unwrap();
    assert!((peak.value - 2.0).abs() <= 1e-12, "peak {}", peak.value);
    assert!((peak.at.r - 2.0).abs() <= 1e-12, "argmax at r = {}", peak.at.r);
    assert!(!summary.consistent(ANALYTIC_TOL_FACTOR));
}

#[test]
fn grid_scan_of_reciprocal_rotation_is_clean() {
    let region = Rect::new(0.5, 2.0, -1.0, 1.0).unwrap();
    let summary = check_cr_grid(&parse("exp(-i*theta)/r").unwrap(), region, 33, 33);
    assert!(summary.peak.unwrap().value <= 1e-10);
}

#[test]
fn grid_scan_records_failures_without_aborting() {
    // Division blows up along r = 1, which the 33-node radial grid hits.
    let region = Rect::new(0.5, 1.5, 0.0, 1.0).unwrap();
    let summary = check_cr_grid(&parse("1/(r - 1)").unwrap(), region, 33, 5);
    assert!(!summary.failures.is_empty());
    assert!(summary.peak.is_some());
    assert_eq!(summary.nodes, 33 * 5);
    assert!(!summary.consistent(ANALYTIC_TOL_FACTOR));
}

#[test]
fn non_analytic_witnesses_fail_the_verdict() {
    let region = Rect::new(0.5, 2.0, -2.0, 2.0).unwrap();
    for (name, witness) in non_analytic_witnesses() {
        let summary = check_cr_grid(&witness, region, 33, 33);
        assert!(
            summary.peak.unwrap().value > 0.1,
            "{name} should have a visible residual"
        );
        assert!(!summary.consistent(ANALYTIC_TOL_FACTOR), "{name}");
    }
}
