//! Mellin derivatives: Θ_c f(x) = x·f'(x) + c·f(x) on the positive axis
//! and Θ̃_c f = re^{iθ}·D_pol f + c·f on H, which agree on θ = 0.
//!
//! Run with: cargo run --example mellin_derivatives

use polar_analytic::catalog::polar_analytic_catalog;
use polar_analytic::mellin::{iterated_theta0, mellin_derivative, mellin_polar_derivative};
use polar_analytic::{parse, parse_one_var, PolarPoint};

fn main() {
    println!("Θ_c on the positive real axis\n{:-<64}", "");
    let cases = [("x^3", 0.0, 2.0), ("1", 1.0, 5.0), ("log(x)", 0.0, std::f64::consts::E)];
    for (source, c, x) in cases {
        let phi = parse_one_var(source).unwrap();
        let v = mellin_derivative(&phi, c, x).unwrap();
        println!("Θ_{c}[{source}]({x}) = {:.12}", v.re);
    }

    println!("\nΘ̃_0 L = 1 on all of H\n{:-<64}", "");
    let big_l = parse("L").unwrap();
    for (r, theta) in [(0.5, -2.0), (1.0, 0.0), (3.0, 5.0)] {
        let v = mellin_polar_derivative(&big_l, 0.0, PolarPoint::new(r, theta)).unwrap();
        println!("at ({r}, {theta}): {:.12} + {:.2e}i", v.re, v.im);
    }

    println!("\nRestriction identity Θ̃_c f(r, 0) = Θ_c φ(r), φ = f(·, 0)\n{:-<64}", "");
    for f in polar_analytic_catalog() {
        let phi = f.expr.restrict_to_positive_axis();
        let r = 1.7;
        let polar = mellin_polar_derivative(&f.expr, -2.5, PolarPoint::new(r, 0.0)).unwrap();
        let axis = mellin_derivative(&phi, -2.5, r).unwrap();
        println!("{:20} gap at r = {r}: {:.3e}", f.name, (polar - axis).norm());
    }

    println!("\nIterates of Θ̃_0 = derivatives of g(z) = f(e^x, y)\n{:-<64}", "");
    let f = parse("sin(z)").unwrap();
    let p = PolarPoint::new(1.0, 0.0);
    for k in 0..=4 {
        let v = iterated_theta0(&f, p, k).unwrap();
        println!("g^({k})(0) = {:+.12} {:+.12}i", v.re, v.im);
    }
}
