//! Images of coordinate-parallel nets under a map of H, with a numerical
//! orthogonality report at every net intersection.

use num_complex::Complex64;

use crate::diff::eval_dual;
use crate::expr::{eval, Expression, PolarPoint};

use super::{GeometryError, DPOL_ZERO_FACTOR};

/// Relative step for tangent estimation by central differences along the
/// curve parametrization.
const TANGENT_STEP_FACTOR: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetOptions {
    /// Sample points per curve (at least 16).
    pub samples_per_curve: usize,
    /// Window padding beyond the extreme net lines: added to θ on both
    /// sides and to log r on both sides.
    pub padding: f64,
}

impl Default for NetOptions {
    fn default() -> Self {
        NetOptions { samples_per_curve: 128, padding: 0.5 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetSample {
    /// Curve parameter: θ on an r-line, log r on a θ-line.
    pub t: f64,
    pub w: Complex64,
}

#[derive(Debug, Clone)]
pub struct NetCurve {
    /// "r=2" or "theta=0.5".
    pub id: String,
    pub is_r_line: bool,
    /// The fixed coordinate value.
    pub level: f64,
    pub samples: Vec<NetSample>,
    /// Set when sampling stopped early because evaluation failed.
    pub truncated_at: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetIntersection {
    pub at: PolarPoint,
    pub image: Complex64,
    /// Image tangent of the r-line (moving in θ).
    pub tangent_theta: Complex64,
    /// Image tangent of the θ-line (moving in log r).
    pub tangent_r: Complex64,
    /// ⟨τ₁, τ₂⟩ / (‖τ₁‖·‖τ₂‖) as plane vectors; near 0 when the image
    /// curves cross at a right angle.
    pub normalized_inner: f64,
    /// False where |D_pol f| fell below the zero threshold; the
    /// orthogonality statement does not apply there.
    pub dpol_nonzero: bool,
}

#[derive(Debug, Clone)]
pub struct NetImage {
    pub curves: Vec<NetCurve>,
    pub intersections: Vec<NetIntersection>,
    /// Evaluation problems encountered at intersections.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NetError {
    #[error("net needs at least one r-line and one θ-line")]
    EmptyNet,
    #[error("net needs at least 16 samples per curve (got {0})")]
    TooFewSamples(usize),
    #[error("r-line levels must be positive and finite (got {0})")]
    BadRadialLevel(f64),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Maps the net {r = a} ∪ {θ = b} through f. Each r-line is sampled
/// uniformly in θ and each θ-line uniformly in log r over a window that
/// covers every intersection plus padding. At each intersection the image
/// tangents are estimated by central differences along the two
/// parametrizations and their normalized inner product is recorded.
pub fn map_net(
    e: &Expression,
    r_values: &[f64],
    theta_values: &[f64],
    opts: &NetOptions,
) -> Result<NetImage, NetError> {
    if r_values.is_empty() || theta_values.is_empty() {
        return Err(NetError::EmptyNet);
    }
    if opts.samples_per_curve < 16 {
        return Err(NetError::TooFewSamples(opts.samples_per_curve));
    }
    for &a in r_values {
        if !(a > 0.0 && a.is_finite()) {
            return Err(NetError::BadRadialLevel(a));
        }
    }

    let theta_lo = theta_values.iter().cloned().fold(f64::INFINITY, f64::min) - opts.padding;
    let theta_hi = theta_values.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + opts.padding;
    let x_lo = r_values.iter().map(|a| a.ln()).fold(f64::INFINITY, f64::min) - opts.padding;
    let x_hi = r_values.iter().map(|a| a.ln()).fold(f64::NEG_INFINITY, f64::max) + opts.padding;

    let mut curves = Vec::new();
    for &a in r_values {
        curves.push(sample_curve(
            e,
            format!("r={a}"),
            true,
            a,
            theta_lo,
            theta_hi,
            opts.samples_per_curve,
            |t| PolarPoint::new(a, t),
        ));
    }
    for &b in theta_values {
        curves.push(sample_curve(
            e,
            format!("theta={b}"),
            false,
            b,
            x_lo,
            x_hi,
            opts.samples_per_curve,
            |t| PolarPoint::new(t.exp(), b),
        ));
    }

    let mut intersections = Vec::new();
    let mut failures = Vec::new();
    let h_theta = TANGENT_STEP_FACTOR * (theta_hi - theta_lo);
    let h_x = TANGENT_STEP_FACTOR * (x_hi - x_lo);
    for &a in r_values {
        for &b in theta_values {
            let at = PolarPoint::new(a, b);
            match intersection_report(e, at, h_theta, h_x) {
                Ok(report) => intersections.push(report),
                Err(err) => failures.push(format!("intersection at {at}: {err}")),
            }
        }
    }

    Ok(NetImage { curves, intersections, failures })
}

#[allow(clippy::too_many_arguments)]
fn sample_curve(
    e: &Expression,
    id: String,
    is_r_line: bool,
    level: f64,
    t_lo: f64,
    t_hi: f64,
    samples: usize,
    point_at: impl Fn(f64) -> PolarPoint,
) -> NetCurve {
    let mut out = Vec::with_capacity(samples);
    let mut truncated_at = None;
    for k in 0..samples {
        let t = t_lo + (t_hi - t_lo) * k as f64 / (samples - 1) as f64;
        match eval(e, point_at(t)) {
            Ok(w) => out.push(NetSample { t, w }),
            Err(err) => {
                truncated_at = Some(format!("t = {t}: {err}"));
                break;
            }
        }
    }
    NetCurve { id, is_r_line, level, samples: out, truncated_at }
}

fn intersection_report(
    e: &Expression,
    at: PolarPoint,
    h_theta: f64,
    h_x: f64,
) -> Result<NetIntersection, GeometryError> {
    let d = eval_dual(e, at)?;
    let dpol_nonzero = d.dr.norm() > DPOL_ZERO_FACTOR * 1.0_f64.max(d.val.norm());

    // Tangent of the r-line image, central difference in θ.
    let f_plus = eval(e, PolarPoint::new(at.r, at.theta + h_theta))?;
    let f_minus = eval(e, PolarPoint::new(at.r, at.theta - h_theta))?;
    let tangent_theta = (f_plus - f_minus) / (2.0 * h_theta);

    // Tangent of the θ-line image, central difference in x = log r.
    let g_plus = eval(e, PolarPoint::new(at.r * h_x.exp(), at.theta))?;
    let g_minus = eval(e, PolarPoint::new(at.r * (-h_x).exp(), at.theta))?;
    let tangent_r = (g_plus - g_minus) / (2.0 * h_x);

    let dot = tangent_theta.re * tangent_r.re + tangent_theta.im * tangent_r.im;
    let norms = tangent_theta.norm() * tangent_r.norm();
    let normalized_inner = if norms == 0.0 { f64::NAN } else { dot / norms };

    Ok(NetIntersection {
        at,
        image: d.val,
        tangent_theta,
        tangent_r,
        normalized_inner,
        dpol_nonzero,
    })
}
