//! Polar-disk geometry and Taylor expansions in log coordinates.
//!
//! A polar-disk E((r₀, θ₀), ρ) is the image of a Euclidean disk under the
//! chart (x, y) ↦ (eˣ, y): membership is (log(r/r₀))² + (θ − θ₀)² < ρ².
//! Under the inverse chart a function f of H becomes g(x + iy) = f(eˣ, y),
//! which is classically analytic exactly when f is polar-analytic; the
//! expansion machinery here recovers the coefficients of g by sampling it
//! on a circle.

mod disk;
mod taylor;

pub use disk::{max_radius, AnalysisError, LogDomain, PolarDisk};
pub use taylor::{
    default_sample_count, sin_alternative_expansion, taylor, TaylorError, TaylorExpansion,
    DEFAULT_SAMPLE_RADIUS_FACTOR,
};
