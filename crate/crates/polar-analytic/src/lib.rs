//! Numerics for polar-analytic functions on the half-plane
//! H = {(r, θ) : r > 0, θ ∈ ℝ}, where the polar coordinates are treated
//! as Cartesian ones and the complex logarithm L(r, θ) = log r + iθ
//! becomes a single-valued function with derivative 1/(re^{iθ}).
//!
//! The library covers:
//!
//! - an expression language for supplying functions of (r, θ) ([`expr`]);
//! - forward-mode differentiation, the polar derivative
//!   D_pol f = e^{−iθ}·∂f/∂r and the polar Cauchy-Riemann residual
//!   ∂f/∂θ − i·r·∂f/∂r ([`diff`]);
//! - polar-disks, the log-coordinate chart and Taylor expansions
//!   recovered by contour sampling ([`analysis`]);
//! - line integrals ∫ f·e^{iθ}(dr + ir·dθ) over piecewise-smooth curves,
//!   path-independence and rectangle-boundary scans ([`contour`]);
//! - the angle-distortion geometry of such maps and orthogonal nets
//!   ([`geometry`]);
//! - Mellin derivatives Θ_c and Θ̃_c ([`mellin`]).
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --example expressions        # parse, print, evaluate
//! cargo run --example cr_residuals       # Cauchy-Riemann residual scans
//! cargo run --example polar_derivatives  # D_pol against closed forms
//! cargo run --example polar_disks        # disk boundaries, maximal radius
//! cargo run --example taylor_series      # log-coordinate expansions
//! cargo run --example contour_integrals  # line integrals, Morera scan
//! cargo run --example angle_distortion   # α vs β, profile in r0
//! cargo run --example orthogonal_net     # net images, CSV/SVG output
//! cargo run --example mellin_derivatives # Θ_c, Θ̃_c, iterates
//! ```
//!
//! The thin `polar-calc` binary exposes the same operations as
//! subcommands with JSON reports; see the crate README.

pub mod analysis;
pub mod catalog;
pub mod cli;
pub mod contour;
pub mod diff;
pub mod expr;
pub mod geometry;
pub mod mellin;
pub mod render;

pub use expr::{eval, eval_one_var, parse, parse_one_var, Expression, PolarPoint};

pub use num_complex::Complex64;
