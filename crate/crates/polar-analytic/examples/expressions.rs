//! The expression language: parsing, canonical printing, evaluation.
//!
//! Run with: cargo run --example expressions

use polar_analytic::{eval, parse, PolarPoint};

fn main() {
    println!("Parsing and printing\n{:-<60}", "");
    for source in ["L", "z^2", "sin(z)", "r^2 * exp(i*2*theta)", "exp(-i*theta)/r"] {
        let tree = parse(source).unwrap();
        println!("{source:24} -> {tree}");
    }

    println!("\nEvaluation on H\n{:-<60}", "");
    let points = [
        PolarPoint::new(1.0, 0.0),
        PolarPoint::new(2.0, std::f64::consts::PI),
        PolarPoint::new(0.5, -1.0),
    ];
    for source in ["L", "sin(z)", "exp(-i*theta)/r"] {
        let tree = parse(source).unwrap();
        println!("{source}:");
        for p in points {
            let v = eval(&tree, p).unwrap();
            println!("  at {p}: {:.6} + {:.6}i", v.re, v.im);
        }
    }

    println!("\nParse errors carry byte offsets\n{:-<60}", "");
    for source in ["r + ", "foo(r)", "r ^^ 2"] {
        match parse(source) {
            Ok(_) => unreachable!(),
            Err(e) => println!("{source:12} -> {e}"),
        }
    }

    println!("\nEvaluation errors\n{:-<60}", "");
    let singular = parse("1/(r - 1)").unwrap();
    match eval(&singular, PolarPoint::new(1.0, 0.0)) {
        Err(e) => println!("1/(r - 1) at (1, 0) -> {e}"),
        Ok(_) => unreachable!(),
    }
}
