//! Polar-disks E((r0, θ0), ρ): boundary parametrization, membership, and
//! the maximal admissible radius inside a domain. Writes the boundary of
//! two disks to polar_disks.svg.
//!
//! Run with: cargo run --example polar_disks

use polar_analytic::analysis::{max_radius, PolarDisk};
use polar_analytic::render;
use polar_analytic::PolarPoint;

fn main() {
    let center = PolarPoint::new(1.0, 0.0);
    println!("Boundary of E((1, 0), 1)\n{:-<60}", "");
    let disk = PolarDisk::new(center, 1.0).unwrap();
    for k in 0..8 {
        let phi = 2.0 * std::f64::consts::PI * k as f64 / 8.0;
        let p = disk.boundary_point(phi);
        let dx = (p.r / center.r).ln();
        let dy = p.theta - center.theta;
        println!(
            "phi = {phi:+.3}: (r, theta) = ({:7.4}, {:+.4})   log-metric defect {:.1e}",
            p.r,
            p.theta,
            (dx * dx + dy * dy - 1.0).abs()
        );
    }

    println!("\nMaximal admissible radius\n{:-<60}", "");
    // Inside the strip |theta| < 1 (truncated far out in r) the largest
    // polar-disk around any (r0, 0) has radius 1.
    let far = 12.0_f64;
    let strip = [
        PolarPoint::new((-far).exp(), -1.0),
        PolarPoint::new(far.exp(), -1.0),
        PolarPoint::new(far.exp(), 1.0),
        PolarPoint::new((-far).exp(), 1.0),
    ];
    for r0 in [0.5, 1.0, 3.0] {
        let rho = max_radius(PolarPoint::new(r0, 0.0), &strip).unwrap();
        println!("strip |theta| < 1, center ({r0}, 0): rho_max = {rho:.12}");
    }

    let boundary = PolarDisk::new(center, 2.0).unwrap().boundary(4096);
    let rho = max_radius(center, &boundary).unwrap();
    println!("own boundary of E((1,0), 2):      rho_max = {rho:.9} (inscribed 4096-gon)");

    let small = PolarDisk::new(PolarPoint::new(1.0, 0.0), 0.33).unwrap();
    let svg = render::disk_boundary_to_svg(&disk.boundary(512));
    std::fs::write("polar_disks.svg", svg).unwrap();
    println!("\nwrote polar_disks.svg ({} boundary points)", 512);
    println!(
        "a smaller disk E((1,0), 0.33) spans r in [{:.4}, {:.4}]",
        small.boundary_point(std::f64::consts::PI).r,
        small.boundary_point(0.0).r
    );
}
