//! Adaptive evaluation of the line integral ∫_γ f(r,θ)·e^{iθ}(dr + ir·dθ),
//! plus the path-independence check and the rectangle-boundary scan.

use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::diff::Rect;
use crate::expr::{eval_in, Bindings, EvalError, Expression};

use super::curve::{Curve, CurveError};
use super::quad::{g7k15, EVALS_PER_RULE};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationOptions {
    /// The run succeeds once the summed local error estimates drop below
    /// tolerance·(1 + |value|).
    pub tolerance: f64,
    /// Hard cap on integrand evaluations across the whole curve.
    pub max_evaluations: usize,
}

impl Default for IntegrationOptions {
    fn default() -> Self {
        IntegrationOptions { tolerance: 1e-9, max_evaluations: 1_000_000 }
    }
}

impl IntegrationOptions {
    pub fn with_tolerance(tolerance: f64) -> Self {
        IntegrationOptions { tolerance, ..Default::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IntegrationError {
    #[error(
        "tolerance not reached within {} evaluations (best value {} + {}i, estimate {:.3e})",
        best.evaluations, best.value.re, best.value.im, best.error_estimate
    )]
    BudgetExhausted { best: IntegralResult },
    #[error("integrand evaluation failed on piece {piece} at t = {t}: {source}")]
    Eval { piece: usize, t: f64, source: EvalError },
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("curves do not share endpoints (start gap {start_gap:.3e}, end gap {end_gap:.3e})")]
    EndpointMismatch { start_gap: f64, end_gap: f64 },
}

/// One work-queue interval. Ordered by local error; ties resolve by
/// insertion sequence so the refinement order is deterministic.
struct WorkItem {
    error: f64,
    seq: u64,
    piece: usize,
    a: f64,
    b: f64,
    value: Complex64,
}

impl PartialEq for WorkItem {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error && self.seq == other.seq
    }
}
impl Eq for WorkItem {}
impl PartialOrd for WorkItem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for WorkItem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// The line integral of f along γ. The integrand per piece is
/// f(r(t), θ(t))·e^{iθ(t)}·(r′(t) + i·r(t)·θ′(t)), with the velocities
/// supplied exactly by the curve. Pieces share one global work queue; the
/// interval with the worst local error is bisected until the summed
/// estimate meets the tolerance contract or the budget runs out.
pub fn line_integral(
    e: &Expression,
    curve: &Curve,
    opts: &IntegrationOptions,
) -> Result<IntegralResult, IntegrationError> {
    let mut evaluations = 0usize;
    let mut seq = 0u64;
    let mut heap: BinaryHeap<WorkItem> = BinaryHeap::new();
    let mut total_value = Complex64::new(0.0, 0.0);
    let mut total_error = 0.0f64;

    let apply_rule = |piece: usize, a: f64, b: f64, evaluations: &mut usize, seq: &mut u64|
     -> Result<WorkItem, IntegrationError> {
        let pc = &curve.pieces()[piece];
        let integrand = |t: f64| -> Result<Complex64, IntegrationError> {
            let pt = pc.eval(t).map_err(|failure| failure.into_error(piece))?;
            let f = eval_in(
                e,
                &Bindings::polar(Complex64::new(pt.r, 0.0), Complex64::new(pt.theta, 0.0)),
            )
            .map_err(|source| IntegrationError::Eval { piece, t, source })?;
            let phase = Complex64::from_polar(1.0, pt.theta);
            Ok(f * phase * Complex64::new(pt.r_dot, pt.r * pt.theta_dot))
        };
        let (value, error) = g7k15(integrand, a, b)?;
        *evaluations += EVALS_PER_RULE;
        *seq += 1;
        Ok(WorkItem { error, seq: *seq, piece, a, b, value })
    };

    for piece in 0..curve.pieces().len() {
        let (a, b) = curve.pieces()[piece].domain();
        let item = apply_rule(piece, a, b, &mut evaluations, &mut seq)?;
        total_value += item.value;
        total_error += item.error;
        heap.push(item);
    }

    loop {
        if total_error <= opts.tolerance * (1.0 + total_value.norm()) {
            break;
        }
        if evaluations + 2 * EVALS_PER_RULE > opts.max_evaluations {
            let best = finalize(heap, evaluations);
            return Err(IntegrationError::BudgetExhausted { best });
        }
        let worst = heap.pop().expect("work queue cannot be empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            // Interval narrowed to machine resolution; its estimate
            // cannot improve. Keep it and treat its error as converged.
            let best = finalize_with(heap, worst, evaluations);
            return Err(IntegrationError::BudgetExhausted { best });
        }
        let left = apply_rule(worst.piece, worst.a, mid, &mut evaluations, &mut seq)?;
        let right = apply_rule(worst.piece, mid, worst.b, &mut evaluations, &mut seq)?;
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    Ok(finalize(heap, evaluations))
}

/// Deterministic final summation: intervals sorted by (piece, position),
/// so pieces are summed in order regardless of refinement history.
fn finalize(heap: BinaryHeap<WorkItem>, evaluations: usize) -> IntegralResult {
    let mut items: Vec<WorkItem> = heap.into_vec();
    items.sort_by(|u, v| u.piece.cmp(&v.piece).then(u.a.total_cmp(&v.a)));
    let mut value = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    for item in &items {
        value += item.value;
        error += item.error;
    }
    IntegralResult { value, error_estimate: error, evaluations }
}

fn finalize_with(mut heap: BinaryHeap<WorkItem>, extra: WorkItem, evaluations: usize) -> IntegralResult {
    heap.push(extra);
    finalize(heap, evaluations)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathIndependenceReport {
    pub integral_1: IntegralResult,
    pub integral_2: IntegralResult,
    pub difference: f64,
    /// 2·(sum of error estimates) + tolerance.
    pub threshold: f64,
    pub pass: bool,
}

/// Integrates f along two curves sharing endpoints and compares. PASS
/// means the observed difference is explained by quadrature error plus
/// the tolerance.
pub fn path_independence_check(
    e: &Expression,
    gamma_1: &Curve,
    gamma_2: &Curve,
    opts: &IntegrationOptions,
) -> Result<PathIndependenceReport, IntegrationError> {
    let start_gap = gamma_1.start().distance(gamma_2.start());
    let end_gap = gamma_1.end().distance(gamma_2.end());
    if start_gap > 1e-12 || end_gap > 1e-12 {
        return Err(IntegrationError::EndpointMismatch { start_gap, end_gap });
    }
    let integral_1 = line_integral(e, gamma_1, opts)?;
    let integral_2 = line_integral(e, gamma_2, opts)?;
    let difference = (integral_1.value - integral_2.value).norm();
    let threshold =
        2.0 * (integral_1.error_estimate + integral_2.error_estimate) + opts.tolerance;
    Ok(PathIndependenceReport {
        integral_1,
        integral_2,
        difference,
        threshold,
        pass: difference <= threshold,
    })
}

/// Largest closed-boundary integral over the sub-rectangle grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoreraPeak {
    pub value: f64,
    pub grid_index: (usize, usize),
    pub rect: Rect,
}

#[derive(Debug, Clone)]
pub struct MoreraReport {
    pub peak: Option<MoreraPeak>,
    /// max |f| sampled on the grid nodes.
    pub scale: f64,
    /// tolerance·(1 + scale).
    pub threshold: f64,
    /// True when every computed loop integral is below the threshold.
    pub consistent: bool,
    /// Sub-rectangles skipped because evaluation failed, with the error.
    pub skipped: Vec<((usize, usize), String)>,
    pub evaluations: usize,
}

/// Integrates around the boundary of every sub-rectangle of an m×n
/// partition of `region` (counterclockwise: bottom, right, top, left) and
/// reports the largest magnitude. A failure on one sub-rectangle is
/// recorded and the scan continues. Ties for the peak resolve to the
/// lexicographically smallest grid index.
pub fn morera_scan(
    e: &Expression,
    region: Rect,
    m: usize,
    n: usize,
    opts: &IntegrationOptions,
) -> MoreraReport {
    assert!(m >= 1 && n >= 1, "grid needs at least one cell per axis");
    let mut scale = 0.0f64;
    for i in 0..=m {
        for j in 0..=n {
            let p = region.node(i, m + 1, j, n + 1);
            if let Ok(v) = crate::expr::eval(e, p) {
                scale = scale.max(v.norm());
            }
        }
    }

    let mut peak: Option<MoreraPeak> = None;
    let mut skipped = Vec::new();
    let mut evaluations = 0usize;
    let dr = (region.r_max - region.r_min) / m as f64;
    let dth = (region.theta_max - region.theta_min) / n as f64;
    for i in 0..m {
        for j in 0..n {
            let cell = Rect {
                r_min: region.r_min + dr * i as f64,
                r_max: region.r_min + dr * (i + 1) as f64,
                theta_min: region.theta_min + dth * j as f64,
                theta_max: region.theta_min + dth * (j + 1) as f64,
            };
            let loop_integral = Curve::rect_boundary(cell)
                .map_err(IntegrationError::from)
                .and_then(|boundary| line_integral(e, &boundary, opts));
            match loop_integral {
                Ok(result) => {
                    evaluations += result.evaluations;
                    let value = result.value.norm();
                    let better = peak.map(|p| value > p.value).unwrap_or(true);
                    if better {
                        peak = Some(MoreraPeak { value, grid_index: (i, j), rect: cell });
                    }
                }
                Err(err) => skipped.push(((i, j), err.to_string())),
            }
        }
    }

    let threshold = opts.tolerance * (1.0 + scale);
    let consistent = peak.map(|p| p.value <= threshold).unwrap_or(false);
    MoreraReport { peak, scale, threshold, consistent, skipped, evaluations }
}
