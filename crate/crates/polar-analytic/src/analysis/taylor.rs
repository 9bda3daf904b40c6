use num_complex::Complex64;
use serde::Serialize;

use crate::diff::{eval_dual, residual_scale, ANALYTIC_TOL_FACTOR};
use crate::expr::{eval, EvalError, Expression, PolarPoint};

use super::disk::PolarDisk;

/// Fraction of the requested expansion radius used as the sampling
/// radius when the caller does not pick one explicitly.
pub const DEFAULT_SAMPLE_RADIUS_FACTOR: f64 = 0.8;

/// Default sample count for a given order: max(256, 4·order) rounded up
/// to a power of two.
pub fn default_sample_count(order: usize) -> usize {
    (4 * order.max(1)).next_power_of_two().max(256)
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TaylorError {
    #[error("sample count {given} must be a power of two with at least 4·order = {minimum}")]
    BadSampleCount { given: usize, minimum: usize },
    #[error("sample radius must be positive and finite (got {0})")]
    BadSampleRadius(f64),
    #[error(
        "function fails the Cauchy-Riemann residual scan at {at} \
         (normalized residual {residual:.3e}); not polar-analytic on the sampling disk"
    )]
    NotPolarAnalytic { at: PolarPoint, residual: f64 },
    #[error("evaluation failed at sample point {at}: {source}")]
    EvalAt { at: PolarPoint, source: EvalError },
}

/// A truncated expansion f(r, θ) ≈ Σ a_k·(log(r/r₀) + i(θ−θ₀))^k around a
/// center of H, with the sampling parameters that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct TaylorExpansion {
    #[serde(serialize_with = "serialize_center")]
    pub center: PolarPoint,
    /// Radius of the sampling circle in log coordinates.
    pub rho_sample: f64,
    #[serde(serialize_with = "serialize_coefficients")]
    pub coefficients: Vec<Complex64>,
    /// |a_K|·ρ^K — magnitude of the last retained term on the sampling
    /// circle, a truncation diagnostic.
    pub tail_estimate: f64,
    #[serde(skip)]
    pub sample_count: usize,
}

fn serialize_center<S: serde::Serializer>(p: &PolarPoint, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("center", 2)?;
    st.serialize_field("r", &p.r)?;
    st.serialize_field("theta", &p.theta)?;
    st.end()
}

fn serialize_coefficients<S: serde::Serializer>(
    cs: &[Complex64],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(cs.iter().map(|c| [c.re, c.im]))
}

impl TaylorExpansion {
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Horner evaluation of the partial sum in w = log(r/r₀) + i(θ−θ₀).
    pub fn eval(&self, p: PolarPoint) -> Complex64 {
        let w = Complex64::new((p.r / self.center.r).ln(), p.theta - self.center.theta);
        let mut acc = Complex64::new(0.0, 0.0);
        for a in self.coefficients.iter().rev() {
            acc = acc * w + a;
        }
        acc
    }

    /// Partial sum truncated to the first `order + 1` coefficients.
    pub fn eval_truncated(&self, p: PolarPoint, order: usize) -> Complex64 {
        let w = Complex64::new((p.r / self.center.r).ln(), p.theta - self.center.theta);
        let mut acc = Complex64::new(0.0, 0.0);
        for a in self.coefficients.iter().take(order + 1).rev() {
            acc = acc * w + a;
        }
        acc
    }
}

/// Expands f around `center` by sampling the log-coordinate conjugate
/// g(z) = f(eˣ, y) on the circle |z − z₀| = `sample_radius` at `samples`
/// equispaced nodes and reading coefficients off the discrete Fourier
/// sums a_k = (N·ρ^k)⁻¹ Σ_m g(z₀ + ρe^{iφ_m}) e^{−ikφ_m}.
///
/// Before sampling, a Cauchy-Riemann residual scan over 64 boundary and
/// 16 interior points rejects functions that are not polar-analytic on
/// the closed sampling disk.
pub fn taylor(
    e: &Expression,
    center: PolarPoint,
    order: usize,
    sample_radius: f64,
    samples: usize,
) -> Result<TaylorExpansion, TaylorError> {
    if !(sample_radius > 0.0 && sample_radius.is_finite()) {
        return Err(TaylorError::BadSampleRadius(sample_radius));
    }
    let minimum = 4 * order.max(1);
    if !samples.is_power_of_two() || samples < minimum {
        return Err(TaylorError::BadSampleCount { given: samples, minimum });
    }
    let disk = PolarDisk { center, radius: sample_radius };
    cr_prescan(e, &disk)?;

    if order == 0 {
        let value = eval(e, center).map_err(|source| TaylorError::EvalAt { at: center, source })?;
        return Ok(TaylorExpansion {
            center,
            rho_sample: sample_radius,
            coefficients: vec![value],
            tail_estimate: value.norm(),
            sample_count: samples,
        });
    }

    let n = samples;
    let mut g = Vec::with_capacity(n);
    for m in 0..n {
        let phi = 2.0 * std::f64::consts::PI * m as f64 / n as f64;
        let p = disk.boundary_point(phi);
        g.push(eval(e, p).map_err(|source| TaylorError::EvalAt { at: p, source })?);
    }

    let mut coefficients = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut sum = Complex64::new(0.0, 0.0);
        for (m, gm) in g.iter().enumerate() {
            // Reduce k·m modulo N before forming the angle so the twiddle
            // phase stays accurate for large k·m.
            let angle = -2.0 * std::f64::consts::PI * ((k * m) % n) as f64 / n as f64;
            sum += gm * Complex64::from_polar(1.0, angle);
        }
        coefficients.push(sum / (n as f64 * sample_radius.powi(k as i32)));
    }

    let tail_estimate = coefficients[order].norm() * sample_radius.powi(order as i32);
    Ok(TaylorExpansion {
        center,
        rho_sample: sample_radius,
        coefficients,
        tail_estimate,
        sample_count: n,
    })
}

/// 64 boundary points plus two interior rings of 8; every point must pass
/// the scale-aware residual verdict.
fn cr_prescan(e: &Expression, disk: &PolarDisk) -> Result<(), TaylorError> {
    let mut probes = Vec::with_capacity(80);
    for k in 0..64 {
        probes.push(disk.boundary_point(2.0 * std::f64::consts::PI * k as f64 / 64.0));
    }
    for (ring, fraction) in [(0usize, 1.0 / 3.0), (1usize, 2.0 / 3.0)] {
        let inner = PolarDisk { center: disk.center, radius: disk.radius * fraction };
        for k in 0..8 {
            // Offset the second ring so the rings interleave.
            let phi = 2.0 * std::f64::consts::PI * (k as f64 + 0.5 * ring as f64) / 8.0;
            probes.push(inner.boundary_point(phi));
        }
    }
    for p in probes {
        let d = eval_dual(e, p).map_err(|source| TaylorError::EvalAt { at: p, source })?;
        let residual = (d.dtheta - Complex64::new(0.0, p.r) * d.dr).norm();
        let scaled = residual / residual_scale(&d, p.r);
        if scaled > ANALYTIC_TOL_FACTOR {
            return Err(TaylorError::NotPolarAnalytic { at: p, residual: scaled });
        }
    }
    Ok(())
}

/// Independent oracle for f(r, θ) = sin(re^{iθ}): the partial sum of
/// Σ (−1)^k r^{2k+1} e^{i(2k+1)θ} / (2k+1)!, computed term by term from
/// the displayed formula. Supports order ≤ 85 (beyond that the factorial
/// overflows f64).
pub fn sin_alternative_expansion(p: PolarPoint, order: usize) -> Complex64 {
    assert!(order <= 85, "factorial overflows f64 beyond order 85");
    let mut sum = Complex64::new(0.0, 0.0);
    let mut factorial = 1.0_f64; // (2k+1)!
    for k in 0..=order {
        let exponent = (2 * k + 1) as i32;
        if k > 0 {
            factorial *= (2 * k) as f64 * (2 * k + 1) as f64;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let term = Complex64::from_polar(p.r.powi(exponent), exponent as f64 * p.theta);
        sum += sign / factorial * term;
    }
    sum
}
