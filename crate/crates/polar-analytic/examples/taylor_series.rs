//! Taylor expansions in the log coordinate w = log(r/r0) + i(θ−θ0),
//! with coefficients recovered by sampling the conjugate function
//! g(x+iy) = f(e^x, y) on a circle.
//!
//! Run with: cargo run --example taylor_series

use polar_analytic::analysis::{sin_alternative_expansion, taylor};
use polar_analytic::{eval, parse, PolarPoint};

fn main() {
    let center = PolarPoint::new(1.0, 0.0);

    println!("L = log(r) + i*theta has the identity series\n{:-<64}", "");
    let t = taylor(&parse("L").unwrap(), center, 4, 0.8, 256).unwrap();
    for (k, a) in t.coefficients.iter().enumerate() {
        println!("a_{k} = {:+.3e} {:+.3e}i", a.re, a.im);
    }

    println!("\nsin(z) around (1, 0): g(z) = sin(e^z)\n{:-<64}", "");
    let f = parse("sin(z)").unwrap();
    let t = taylor(&f, center, 24, 1.0, 256).unwrap();
    println!("a_0 = {:+.12}   (sin 1 = {:+.12})", t.coefficients[0].re, 1.0_f64.sin());
    println!("a_1 = {:+.12}   (cos 1 = {:+.12})", t.coefficients[1].re, 1.0_f64.cos());
    println!("tail estimate |a_24|*rho^24 = {:.3e}", t.tail_estimate);

    println!("\nPartial sums converge inside the polar-disk\n{:-<64}", "");
    let p = PolarPoint::new(1.35, 0.25);
    let direct = eval(&f, p).unwrap();
    for order in [2, 6, 10, 14, 18, 22] {
        let err = (t.eval_truncated(p, order) - direct).norm();
        println!("order {order:2}: |S_K - f| = {err:.3e}");
    }

    println!("\nTwo independent expansions of the same function\n{:-<64}", "");
    for p in [PolarPoint::new(1.2, 0.3), PolarPoint::new(0.8, -0.5)] {
        let series = t.eval(p);
        let alternative = sin_alternative_expansion(p, 24);
        let direct = eval(&f, p).unwrap();
        println!(
            "at {p}: log-coordinate series {:.10}, power series {:.10}, direct {:.10}",
            series.re, alternative.re, direct.re
        );
        println!(
            "          gaps: {:.2e} and {:.2e}",
            (series - direct).norm(),
            (alternative - direct).norm()
        );
    }

    println!("\nThe sampling pre-scan rejects non-analytic input\n{:-<64}", "");
    match taylor(&parse("r").unwrap(), center, 4, 0.5, 256) {
        Err(e) => println!("taylor(r, ...) -> {e}"),
        Ok(_) => unreachable!(),
    }
}
