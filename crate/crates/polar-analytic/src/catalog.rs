//! A small catalog of functions with known behavior, used by the examples
//! and the verification suites.
//!
//! The analytic entries are written so that evaluation never crosses the
//! principal branch cut for r > 0: powers of z with non-integer exponent
//! are spelled as r^a * exp(i*a*theta) rather than through a complex log.

use num_complex::Complex64;

use crate::expr::{parse, Expression, PolarPoint};

/// A catalog entry: a function of H together with the closed form of its
/// polar derivative, usable as an independent oracle.
pub struct CatalogFunction {
    pub name: &'static str,
    pub source: &'static str,
    pub expr: Expression,
    /// Closed-form polar derivative.
    pub dpol: fn(PolarPoint) -> Complex64,
}

fn z(p: PolarPoint) -> Complex64 {
    p.to_complex()
}

/// Functions that are polar-analytic on all of H.
pub fn polar_analytic_catalog() -> Vec<CatalogFunction> {
    vec![
        CatalogFunction {
            name: "L",
            source: "L",
            expr: parse("L").unwrap(),
            dpol: |p| z(p).inv(),
        },
        CatalogFunction {
            name: "z^2",
            source: "z^2",
            expr: parse("z^2").unwrap(),
            dpol: |p| 2.0 * z(p),
        },
        CatalogFunction {
            name: "z^(1/2)",
            source: "r^0.5*exp(i*0.5*theta)",
            expr: parse("r^0.5*exp(i*0.5*theta)").unwrap(),
            dpol: |p| 0.5 * Complex64::from_polar(p.r.powf(-0.5), -0.5 * p.theta),
        },
        CatalogFunction {
            name: "sin z",
            source: "sin(z)",
            expr: parse("sin(z)").unwrap(),
            dpol: |p| z(p).cos(),
        },
        CatalogFunction {
            name: "exp z",
            source: "exp(z)",
            expr: parse("exp(z)").unwrap(),
            dpol: |p| z(p).exp(),
        },
        CatalogFunction {
            name: "exp(-i*theta)/r",
            source: "exp(-i*theta)/r",
            expr: parse("exp(-i*theta)/r").unwrap(),
            dpol: |p| {
                let w = z(p);
                -(w * w).inv()
            },
        },
    ]
}

/// Continuous functions of (r, θ) that are *not* polar-analytic; their
/// Cauchy-Riemann residual is large somewhere on any reasonable region.
pub fn non_analytic_witnesses() -> Vec<(&'static str, Expression)> {
    vec![
        ("r", parse("r").unwrap()),
        ("theta", parse("theta").unwrap()),
        ("r*r", parse("r*r").unwrap()),
    ]
}
