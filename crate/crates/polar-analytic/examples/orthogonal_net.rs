//! Orthogonal nets: coordinate-parallel lines of H map to mutually
//! orthogonal image curves wherever D_pol f ≠ 0. For f = e^{−iθ}/r the
//! lines r = a become circles of radius 1/a and the lines θ = b become
//! rays at angle −b. Writes orthogonal_net.svg and orthogonal_net.csv.
//!
//! Run with: cargo run --example orthogonal_net

use polar_analytic::geometry::{map_net, NetOptions};
use polar_analytic::render;
use polar_analytic::parse;

fn main() {
    let f = parse("exp(-i*theta)/r").unwrap();
    let r_lines = [0.75, 1.0, 1.5, 2.0];
    let theta_lines = [-0.8, 0.0, 0.8];
    let net = map_net(&f, &r_lines, &theta_lines, &NetOptions::default()).unwrap();

    println!("f = exp(-i*theta)/r\n{:-<64}", "");
    for curve in &net.curves {
        let first = curve.samples.first().unwrap().w;
        if curve.is_r_line {
            println!(
                "{:12} -> circle, |w| = {:.12} (expect {:.12})",
                curve.id,
                first.norm(),
                1.0 / curve.level
            );
        } else {
            println!(
                "{:12} -> ray, arg(w) = {:+.12} (expect {:+.12})",
                curve.id,
                first.arg(),
                -curve.level
            );
        }
    }

    println!("\nOrthogonality at the {} net intersections\n{:-<64}", net.intersections.len(), "");
    let worst = net
        .intersections
        .iter()
        .map(|i| i.normalized_inner.abs())
        .fold(0.0f64, f64::max);
    println!("max |normalized inner product of image tangents| = {worst:.3e}");

    std::fs::write("orthogonal_net.svg", render::net_to_svg(&net)).unwrap();
    std::fs::write("orthogonal_net.csv", render::net_to_csv(&net)).unwrap();
    println!("\nwrote orthogonal_net.svg and orthogonal_net.csv");

    println!("\nThe same net under sin(z)\n{:-<64}", "");
    let sine_net = map_net(
        &parse("sin(z)").unwrap(),
        &r_lines,
        &theta_lines,
        &NetOptions::default(),
    )
    .unwrap();
    let worst = sine_net
        .intersections
        .iter()
        .filter(|i| i.dpol_nonzero)
        .map(|i| i.normalized_inner.abs())
        .fold(0.0f64, f64::max);
    println!("max |normalized inner product| = {worst:.3e}");
    std::fs::write("orthogonal_net_sin.svg", render::net_to_svg(&sine_net)).unwrap();
    println!("wrote orthogonal_net_sin.svg");
}
