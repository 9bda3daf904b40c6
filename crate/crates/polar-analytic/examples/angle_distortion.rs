//! How polar-analytic maps distort angles: the image angle β depends only
//! on (r0, φ1, φ2), never on the function, and equals the pre-image angle
//! α exactly on the line r0 = 1.
//!
//! Run with: cargo run --example angle_distortion

use polar_analytic::catalog::polar_analytic_catalog;
use polar_analytic::geometry::{
    angle_alpha, angle_beta, angle_beta_via_jacobian, beta_profile_from_angles, BetaProfile,
};
use polar_analytic::PolarPoint;

fn main() {
    let (phi1, phi2) = (0.3, 1.1);
    println!("alpha({phi1}, {phi2}) = {:.6}\n", angle_alpha(phi1, phi2));

    println!("beta as r0 moves (same direction pair)\n{:-<60}", "");
    for r0 in [0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0] {
        println!("r0 = {r0:>7}: beta = {:.6}", angle_beta(r0, phi1, phi2));
    }
    println!("conformal at r0 = 1: beta - alpha = {:.3e}", (angle_beta(1.0, phi1, phi2) - angle_alpha(phi1, phi2)).abs());

    println!("\nbeta is function-independent (computed through J)\n{:-<60}", "");
    let p = PolarPoint::new(1.7, 0.6);
    let closed_form = angle_beta(p.r, phi1, phi2);
    println!("closed form at r0 = {}: {:.12}", p.r, closed_form);
    for f in polar_analytic_catalog() {
        let beta = angle_beta_via_jacobian(&f.expr, p, phi1, phi2).unwrap();
        println!("{:20} beta via J = {:.12}   gap {:.1e}", f.name, beta, (beta - closed_form).abs());
    }

    println!("\nProfile of beta in r0\n{:-<60}", "");
    let pairs = [(0.5, -0.7), (1.1, 0.4), (0.0, 0.8), (0.9, 0.9)];
    for (a, b) in pairs {
        match beta_profile_from_angles(a, b).unwrap() {
            BetaProfile::Constant => println!("({a}, {b}): beta = 0 for every r0"),
            BetaProfile::Monotone { beta_limit_at_zero, beta_limit_at_infinity } => println!(
                "({a}, {b}): beta increases from {beta_limit_at_zero} to {beta_limit_at_infinity:.6}"
            ),
            BetaProfile::MinCosAt { r0_star } => println!(
                "({a}, {b}): cos(beta) is smallest at r0 = {r0_star:.6} (beta largest there)"
            ),
        }
    }

    println!("\nThe vertical pair is special: beta = pi/2 at every r0\n{:-<60}", "");
    for r0 in [1e-6, 1.0, 1e6] {
        println!(
            "r0 = {r0:>7}: beta(0, pi/2) = {:.12}",
            angle_beta(r0, 0.0, std::f64::consts::FRAC_PI_2)
        );
    }
}
