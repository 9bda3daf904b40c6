//! Polar Cauchy-Riemann residuals: ∂f/∂θ − i·r·∂f/∂r vanishes exactly on
//! polar-analytic functions and stays visibly large on anything else.
//!
//! Run with: cargo run --example cr_residuals

use polar_analytic::catalog::{non_analytic_witnesses, polar_analytic_catalog};
use polar_analytic::diff::{check_cr_grid, cr_residual, Rect, ANALYTIC_TOL_FACTOR};
use polar_analytic::PolarPoint;

fn main() {
    let p = PolarPoint::new(1.3, 0.7);
    println!("Pointwise residuals at {p}\n{:-<60}", "");
    for f in polar_analytic_catalog() {
        let res = cr_residual(&f.expr, p).unwrap();
        println!("{:20} |residual| = {:.3e}", f.name, res.norm());
    }
    for (name, witness) in non_analytic_witnesses() {
        let res = cr_residual(&witness, p).unwrap();
        println!("{name:20} |residual| = {:.3e}   (not polar-analytic)", res.norm());
    }

    let region = Rect::new(0.5, 2.0, -2.0, 2.0).unwrap();
    println!("\nGrid scan on [0.5, 2] x [-2, 2], 33 x 33\n{:-<60}", "");
    for f in polar_analytic_catalog() {
        let summary = check_cr_grid(&f.expr, region, 33, 33);
        let peak = summary.peak.unwrap();
        println!(
            "{:20} max |residual| = {:.3e} at {}   verdict: {}",
            f.name,
            peak.value,
            peak.at,
            if summary.consistent(ANALYTIC_TOL_FACTOR) { "consistent" } else { "INCONSISTENT" }
        );
    }
    for (name, witness) in non_analytic_witnesses() {
        let summary = check_cr_grid(&witness, region, 33, 33);
        let peak = summary.peak.unwrap();
        println!(
            "{:20} max |residual| = {:.3e} at {}   verdict: {}",
            name,
            peak.value,
            peak.at,
            if summary.consistent(ANALYTIC_TOL_FACTOR) { "consistent" } else { "INCONSISTENT" }
        );
    }
}
