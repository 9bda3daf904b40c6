//! First-order forward-mode differentiation through expressions, the polar
//! derivative in both closed forms, and the polar Cauchy-Riemann residual
//! ∂f/∂θ − i·r·∂f/∂r, which vanishes exactly on polar-analytic functions.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::expr::{eval_in, Bindings, EvalError, EvalScalar, Expression, PolarPoint};

/// Default factor for the scale-aware "polar-analytic at this point"
/// verdict: |residual| ≤ factor · max(1, |f|, |∂f/∂r|, r·|∂f/∂r|).
pub const ANALYTIC_TOL_FACTOR: f64 = 1e-8;

/// A complex value carrying first-order partial derivatives with respect
/// to r and θ. In one-variable mode the `dr` slot holds d/dx.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dual1 {
    pub val: Complex64,
    pub dr: Complex64,
    pub dtheta: Complex64,
}

impl Dual1 {
    pub fn constant(val: Complex64) -> Self {
        Dual1 { val, dr: Complex64::new(0.0, 0.0), dtheta: Complex64::new(0.0, 0.0) }
    }

    /// The r coordinate as a seed: ∂r/∂r = 1, ∂r/∂θ = 0.
    pub fn var_r(r: f64) -> Self {
        Dual1 {
            val: Complex64::new(r, 0.0),
            dr: Complex64::new(1.0, 0.0),
            dtheta: Complex64::new(0.0, 0.0),
        }
    }

    /// The θ coordinate as a seed: ∂θ/∂r = 0, ∂θ/∂θ = 1.
    pub fn var_theta(theta: f64) -> Self {
        Dual1 {
            val: Complex64::new(theta, 0.0),
            dr: Complex64::new(0.0, 0.0),
            dtheta: Complex64::new(1.0, 0.0),
        }
    }

    /// Applies a scalar function with known derivative: (g(v), g'(v)·dv).
    fn lift(self, value: Complex64, derivative: Complex64) -> Self {
        Dual1 { val: value, dr: derivative * self.dr, dtheta: derivative * self.dtheta }
    }
}

impl Add for Dual1 {
    type Output = Dual1;
    fn add(self, rhs: Dual1) -> Dual1 {
        Dual1 { val: self.val + rhs.val, dr: self.dr + rhs.dr, dtheta: self.dtheta + rhs.dtheta }
    }
}

impl Sub for Dual1 {
    type Output = Dual1;
    fn sub(self, rhs: Dual1) -> Dual1 {
        Dual1 { val: self.val - rhs.val, dr: self.dr - rhs.dr, dtheta: self.dtheta - rhs.dtheta }
    }
}

impl Mul for Dual1 {
    type Output = Dual1;
    fn mul(self, rhs: Dual1) -> Dual1 {
        Dual1 {
            val: self.val * rhs.val,
            dr: self.dr * rhs.val + self.val * rhs.dr,
            dtheta: self.dtheta * rhs.val + self.val * rhs.dtheta,
        }
    }
}

impl Div for Dual1 {
    type Output = Dual1;
    fn div(self, rhs: Dual1) -> Dual1 {
        let den = rhs.val * rhs.val;
        Dual1 {
            val: self.val / rhs.val,
            dr: (self.dr * rhs.val - self.val * rhs.dr) / den,
            dtheta: (self.dtheta * rhs.val - self.val * rhs.dtheta) / den,
        }
    }
}

impl Neg for Dual1 {
    type Output = Dual1;
    fn neg(self) -> Dual1 {
        Dual1 { val: -self.val, dr: -self.dr, dtheta: -self.dtheta }
    }
}

impl EvalScalar for Dual1 {
    fn from_complex(c: Complex64) -> Self {
        Dual1::constant(c)
    }
    fn value(&self) -> Complex64 {
        self.val
    }
    fn exp(self) -> Self {
        let v = self.val.exp();
        self.lift(v, v)
    }
    fn ln(self) -> Self {
        self.lift(self.val.ln(), self.val.inv())
    }
    fn sin(self) -> Self {
        self.lift(self.val.sin(), self.val.cos())
    }
    fn cos(self) -> Self {
        self.lift(self.val.cos(), -self.val.sin())
    }
    fn sinh(self) -> Self {
        self.lift(self.val.sinh(), self.val.cosh())
    }
    fn cosh(self) -> Self {
        self.lift(self.val.cosh(), self.val.sinh())
    }
}

/// Evaluates value and both partials of a polar-mode expression at p.
pub fn eval_dual(e: &Expression, p: PolarPoint) -> Result<Dual1, EvalError> {
    eval_in(e, &Bindings::polar(Dual1::var_r(p.r), Dual1::var_theta(p.theta)))
}

/// Evaluates a one-variable expression with d/dx in the `dr` slot.
pub fn eval_dual_one_var(e: &Expression, x: f64) -> Result<Dual1, EvalError> {
    eval_in(e, &Bindings::one_var(Dual1::var_r(x)))
}

/// The polar derivative e^{−iθ}·∂f/∂r.
pub fn dpol(e: &Expression, p: PolarPoint) -> Result<Complex64, EvalError> {
    let d = eval_dual(e, p)?;
    Ok(Complex64::from_polar(1.0, -p.theta) * d.dr)
}

/// Both closed forms of the polar derivative and the Cauchy-Riemann
/// residual at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeReport {
    pub point: PolarPoint,
    pub value: Complex64,
    /// e^{−iθ}·∂f/∂r
    pub dpol_via_r: Complex64,
    /// (e^{−iθ}/(i·r))·∂f/∂θ — equals `dpol_via_r` when the residual is 0.
    pub dpol_via_theta: Complex64,
    /// ∂f/∂θ − i·r·∂f/∂r
    pub cr_residual: Complex64,
}

pub fn derivative_report(e: &Expression, p: PolarPoint) -> Result<DerivativeReport, EvalError> {
    let d = eval_dual(e, p)?;
    let phase = Complex64::from_polar(1.0, -p.theta);
    let ir = Complex64::new(0.0, p.r);
    Ok(DerivativeReport {
        point: p,
        value: d.val,
        dpol_via_r: phase * d.dr,
        dpol_via_theta: phase * d.dtheta / ir,
        cr_residual: d.dtheta - ir * d.dr,
    })
}

/// The polar Cauchy-Riemann residual ∂f/∂θ − i·r·∂f/∂r.
pub fn cr_residual(e: &Expression, p: PolarPoint) -> Result<Complex64, EvalError> {
    let d = eval_dual(e, p)?;
    Ok(d.dtheta - Complex64::new(0.0, p.r) * d.dr)
}

/// Scale used to normalize the residual before comparing against a
/// tolerance factor.
pub fn residual_scale(d: &Dual1, r: f64) -> f64 {
    1.0_f64.max(d.val.norm()).max(d.dr.norm()).max(r * d.dr.norm())
}

/// Scale-aware pointwise verdict: residual small relative to the local
/// magnitudes of f and its radial derivative.
pub fn is_polar_analytic_at(
    e: &Expression,
    p: PolarPoint,
    tol_factor: f64,
) -> Result<bool, EvalError> {
    let d = eval_dual(e, p)?;
    let residual = (d.dtheta - Complex64::new(0.0, p.r) * d.dr).norm();
    Ok(residual <= tol_factor * residual_scale(&d, p.r))
}

/// An axis-aligned rectangle [r_min, r_max] × [θ_min, θ_max] inside H.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub r_min: f64,
    pub r_max: f64,
    pub theta_min: f64,
    pub theta_max: f64,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RectError {
    #[error("rectangle must satisfy 0 < r_min ≤ r_max (got [{0}, {1}])")]
    BadRadialRange(f64, f64),
    #[error("rectangle must satisfy θ_min ≤ θ_max (got [{0}, {1}])")]
    BadAngularRange(f64, f64),
}

impl Rect {
    pub fn new(r_min: f64, r_max: f64, theta_min: f64, theta_max: f64) -> Result<Self, RectError> {
        if !(r_min > 0.0 && r_min <= r_max && r_max.is_finite()) {
            return Err(RectError::BadRadialRange(r_min, r_max));
        }
        if !(theta_min <= theta_max && theta_min.is_finite() && theta_max.is_finite()) {
            return Err(RectError::BadAngularRange(theta_min, theta_max));
        }
        Ok(Rect { r_min, r_max, theta_min, theta_max })
    }

    pub fn corner_min(&self) -> PolarPoint {
        PolarPoint::new(self.r_min, self.theta_min)
    }

    /// Grid node (i, j) of an n_r × n_theta lattice including both edges.
    pub fn node(&self, i: usize, n_r: usize, j: usize, n_theta: usize) -> PolarPoint {
        debug_assert!(n_r >= 2 && n_theta >= 2);
        let fr = i as f64 / (n_r - 1) as f64;
        let ft = j as f64 / (n_theta - 1) as f64;
        PolarPoint::new(
            self.r_min + fr * (self.r_max - self.r_min),
            self.theta_min + ft * (self.theta_max - self.theta_min),
        )
    }
}

/// Largest residual found by a grid scan, with its location.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrPeak {
    pub value: f64,
    pub at: PolarPoint,
}

/// Result of an exhaustive Cauchy-Riemann residual scan over a grid.
#[derive(Debug, Clone)]
pub struct CrGridSummary {
    /// Largest raw |residual|; `None` when every node failed to evaluate.
    pub peak: Option<CrPeak>,
    /// Largest residual normalized by the local scale; drives the verdict.
    pub peak_scaled: Option<CrPeak>,
    /// Nodes where evaluation failed, with the failure.
    pub failures: Vec<(PolarPoint, EvalError)>,
    pub nodes: usize,
}

impl CrGridSummary {
    /// Verdict "consistent with polar-analytic on the grid": every node
    /// evaluated and passed the scale-aware residual test.
    pub fn consistent(&self, tol_factor: f64) -> bool {
        self.failures.is_empty()
            && self.peak_scaled.map(|p| p.value <= tol_factor).unwrap_or(false)
    }
}

/// Scans the polar Cauchy-Riemann residual over an n_r × n_theta grid.
///
/// Evaluation failures are recorded per node and do not abort the scan.
/// Ties for the maximum resolve to the smaller r, then the smaller θ
/// (the scan order), which keeps the result deterministic.
pub fn check_cr_grid(e: &Expression, region: Rect, n_r: usize, n_theta: usize) -> CrGridSummary {
    assert!(n_r >= 2 && n_theta >= 2, "grid needs at least 2 nodes per axis");
    let mut summary =
        CrGridSummary { peak: None, peak_scaled: None, failures: Vec::new(), nodes: n_r * n_theta };
    for i in 0..n_r {
        for j in 0..n_theta {
            let p = region.node(i, n_r, j, n_theta);
            match eval_dual(e, p) {
                Ok(d) => {
                    let residual = (d.dtheta - Complex64::new(0.0, p.r) * d.dr).norm();
                    let scaled = residual / residual_scale(&d, p.r);
                    update_peak(&mut summary.peak, residual, p);
                    update_peak(&mut summary.peak_scaled, scaled, p);
                }
                Err(err) => summary.failures.push((p, err)),
            }
        }
    }
    summary
}

fn update_peak(slot: &mut Option<CrPeak>, value: f64, at: PolarPoint) {
    let better = match slot {
        Some(peak) => value > peak.value,
        None => true,
    };
    if better {
        *slot = Some(CrPeak { value, at });
    }
}

#[cfg(test)]
mod tests;
