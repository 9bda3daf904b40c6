//! Angle geometry of polar-analytic maps: the 2×2 Jacobi-type matrix, the
//! pre-image/image angle formulas, the r₀-dependence of the image angle,
//! and images of coordinate-parallel nets.
//!
//! Writing (c_j, s_j) = (cos φ_j, sin φ_j) for two tangent directions at
//! (r₀, θ₀), the image angle β satisfies
//!
//! ```text
//! cos β = (c₁c₂ + r₀²·s₁s₂) / (√(c₁² + r₀²s₁²)·√(c₂² + r₀²s₂²))
//! ```
//!
//! independently of the mapped function and of θ₀; angles are preserved
//! exactly on the line r₀ = 1.

mod net;

pub use net::{map_net, NetCurve, NetError, NetImage, NetIntersection, NetOptions, NetSample};

use crate::diff::eval_dual;
use crate::expr::{EvalError, Expression, PolarPoint};

/// |D_pol f| below this multiple of max(1, |f|) counts as a vanishing
/// polar derivative, where the image-angle formulas do not apply.
pub const DPOL_ZERO_FACTOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("polar derivative vanishes at {at} (|D_pol f| = {magnitude:.3e}); image angles are undefined there")]
    VanishingPolarDerivative { at: PolarPoint, magnitude: f64 },
    #[error("tangent of {phi} is undefined; treat the φ₁ = 0, φ₂ = π/2 direction pair directly (β = π/2 for every r₀)")]
    TangentUndefined { phi: f64 },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// The matrix taking the role of the Jacobian for a map of H into ℝ²:
///
/// ```text
/// ( ∂u/∂r   −r₀·∂v/∂r )
/// ( ∂v/∂r    r₀·∂u/∂r )
/// ```
///
/// with determinant r₀·((∂u/∂r)² + (∂v/∂r)²) ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jacobian2 {
    pub du_dr: f64,
    pub dv_dr: f64,
    pub r0: f64,
}

impl Jacobian2 {
    pub fn of(e: &Expression, p: PolarPoint) -> Result<Self, EvalError> {
        let d = eval_dual(e, p)?;
        Ok(Jacobian2 { du_dr: d.dr.re, dv_dr: d.dr.im, r0: p.r })
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [
            [self.du_dr, -self.r0 * self.dv_dr],
            [self.dv_dr, self.r0 * self.du_dr],
        ]
    }

    pub fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        [
            self.du_dr * v[0] - self.r0 * self.dv_dr * v[1],
            self.dv_dr * v[0] + self.r0 * self.du_dr * v[1],
        ]
    }

    pub fn det(&self) -> f64 {
        self.r0 * (self.du_dr * self.du_dr + self.dv_dr * self.dv_dr)
    }
}

/// Unsigned angle in [0, π] between two plane vectors. atan2 of the cross
/// and dot products; algebraically the arccos of the normalized inner
/// product, but stable when the vectors are nearly parallel.
fn angle_between(u: [f64; 2], v: [f64; 2]) -> f64 {
    let dot = u[0] * v[0] + u[1] * v[1];
    let cross = u[0] * v[1] - u[1] * v[0];
    cross.abs().atan2(dot)
}

/// The pre-image angle between tangent directions φ₁ and φ₂: the angle
/// between the unit vectors (cos φ_j, sin φ_j), which is |φ₂ − φ₁| folded
/// into [0, π].
pub fn angle_alpha(phi1: f64, phi2: f64) -> f64 {
    angle_between([phi1.cos(), phi1.sin()], [phi2.cos(), phi2.sin()])
}

/// Both angles of one direction pair at one radius. β depends only on
/// these three inputs — never on the mapped function or on θ₀.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleReport {
    /// Pre-image angle, in [0, π].
    pub alpha: f64,
    /// Image angle, in [0, π].
    pub beta: f64,
    pub r0: f64,
    pub phi1: f64,
    pub phi2: f64,
}

impl AngleReport {
    pub fn compute(r0: f64, phi1: f64, phi2: f64) -> Self {
        AngleReport {
            alpha: angle_alpha(phi1, phi2),
            beta: angle_beta(r0, phi1, phi2),
            r0,
            phi1,
            phi2,
        }
    }
}

/// The image angle: the angle between (c₁, r₀s₁) and (c₂, r₀s₂). Depends
/// only on (r₀, φ₁, φ₂), and equals α when r₀ = 1.
pub fn angle_beta(r0: f64, phi1: f64, phi2: f64) -> f64 {
    assert!(r0 > 0.0, "angle_beta requires r0 > 0");
    angle_between(
        [phi1.cos(), r0 * phi1.sin()],
        [phi2.cos(), r0 * phi2.sin()],
    )
}

/// The image angle computed the long way round, through the Jacobi-type
/// matrix of an actual function: the angle between J·(c₁, s₁) and
/// J·(c₂, s₂). Must agree with [`angle_beta`] — the function-dependent
/// factors cancel — and is rejected where the polar derivative vanishes.
pub fn angle_beta_via_jacobian(
    e: &Expression,
    p: PolarPoint,
    phi1: f64,
    phi2: f64,
) -> Result<f64, GeometryError> {
    let d = eval_dual(e, p)?;
    let magnitude = d.dr.norm(); // |D_pol f| = |e^{−iθ}·∂f/∂r| = |∂f/∂r|
    if magnitude <= DPOL_ZERO_FACTOR * 1.0_f64.max(d.val.norm()) {
        return Err(GeometryError::VanishingPolarDerivative { at: p, magnitude });
    }
    let jacobian = Jacobian2 { du_dr: d.dr.re, dv_dr: d.dr.im, r0: p.r };
    Ok(angle_between(
        jacobian.apply([phi1.cos(), phi1.sin()]),
        jacobian.apply([phi2.cos(), phi2.sin()]),
    ))
}

/// How the image angle β varies with r₀ for a fixed pair of tangent
/// directions, classified by the sign of d(cos β)/d(r₀²). With
/// t_j = tan φ_j the sign of the derivative is the sign of
/// (t₁ − t₂)²·(r₀²t₁t₂ − 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BetaProfile {
    /// t₁ = t₂ = 0: both directions are radial and β = 0 for every r₀.
    Constant,
    /// t₁t₂ ≤ 0 (not both zero): cos β decreases in r₀, so β increases
    /// between the recorded limits.
    Monotone {
        beta_limit_at_zero: f64,
        beta_limit_at_infinity: f64,
    },
    /// t₁t₂ > 0: cos β is smallest at r₀* = 1/√(t₁t₂), decreasing to
    /// its left and increasing to its right. When t₁ = t₂ the profile
    /// degenerates to the constant β = 0 and the minimum is attained
    /// everywhere, r₀* included.
    MinCosAt { r0_star: f64 },
}

/// Classification from the tangents t_j = tan φ_j directly, by the sign
/// of r₀²t₁t₂ − 1.
pub fn beta_profile(t1: f64, t2: f64) -> BetaProfile {
    let product = t1 * t2;
    if product > 0.0 {
        BetaProfile::MinCosAt { r0_star: 1.0 / product.sqrt() }
    } else if product < 0.0 {
        BetaProfile::Monotone {
            beta_limit_at_zero: 0.0,
            beta_limit_at_infinity: std::f64::consts::PI,
        }
    } else if t1 == 0.0 && t2 == 0.0 {
        BetaProfile::Constant
    } else {
        // Exactly one tangent is zero: one direction is radial, and the
        // limit angle is a right angle.
        BetaProfile::Monotone {
            beta_limit_at_zero: 0.0,
            beta_limit_at_infinity: std::f64::consts::FRAC_PI_2,
        }
    }
}

/// Classification from the directions φ_j ∈ (−π/2, π/2). φ = ±π/2 has no
/// tangent and is rejected; that vertical-direction case pairs with
/// φ₁ = 0 to give β = π/2 for every r₀.
pub fn beta_profile_from_angles(phi1: f64, phi2: f64) -> Result<BetaProfile, GeometryError> {
    for phi in [phi1, phi2] {
        if phi.abs() >= std::f64::consts::FRAC_PI_2 {
            return Err(GeometryError::TangentUndefined { phi });
        }
    }
    Ok(beta_profile(phi1.tan(), phi2.tan()))
}

/// cos β as a function of ξ = r₀², the quantity whose monotonicity the
/// profile describes. Exposed for scans and plots.
pub fn cos_beta_of_r0(r0: f64, phi1: f64, phi2: f64) -> f64 {
    angle_beta(r0, phi1, phi2).cos()
}
