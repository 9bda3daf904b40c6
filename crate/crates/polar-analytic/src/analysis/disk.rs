use num_complex::Complex64;

use crate::expr::PolarPoint;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error("boundary polyline is empty")]
    EmptyBoundary,
    #[error("polar-disk radius must be positive and finite (got {0})")]
    BadRadius(f64),
}

/// The region E((r₀, θ₀), ρ) = {(r, θ) : (log(r/r₀))² + (θ−θ₀)² < ρ²}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarDisk {
    pub center: PolarPoint,
    pub radius: f64,
}

impl PolarDisk {
    pub fn new(center: PolarPoint, radius: f64) -> Result<Self, AnalysisError> {
        if radius > 0.0 && radius.is_finite() {
            Ok(PolarDisk { center, radius })
        } else {
            Err(AnalysisError::BadRadius(radius))
        }
    }

    /// Membership predicate (strict interior).
    pub fn contains(&self, p: PolarPoint) -> bool {
        let dx = (p.r / self.center.r).ln();
        let dy = p.theta - self.center.theta;
        dx * dx + dy * dy < self.radius * self.radius
    }

    /// The boundary point at angle φ of the parametrization
    /// r = r₀·exp(ρ cos φ), θ = θ₀ + ρ sin φ.
    pub fn boundary_point(&self, phi: f64) -> PolarPoint {
        PolarPoint::new(
            self.center.r * (self.radius * phi.cos()).exp(),
            self.center.theta + self.radius * phi.sin(),
        )
    }

    /// m points tracing the closed boundary once (φ = 2πk/m, k = 0..m).
    /// Every emitted point satisfies the membership equation with
    /// equality. Requires m ≥ 8.
    pub fn boundary(&self, m: usize) -> Vec<PolarPoint> {
        assert!(m >= 8, "boundary sampling needs at least 8 points");
        (0..m)
            .map(|k| self.boundary_point(2.0 * std::f64::consts::PI * k as f64 / m as f64))
            .collect()
    }
}

/// A boundary polyline carried into log coordinates, where the polar-disk
/// metric is Euclidean. The chart (r, θ) ↦ (log r, θ) is applied to each
/// vertex; it is a bijection of H onto the plane.
#[derive(Debug, Clone)]
pub struct LogDomain {
    vertices: Vec<(f64, f64)>,
}

impl LogDomain {
    pub fn from_boundary(boundary: &[PolarPoint]) -> Result<Self, AnalysisError> {
        if boundary.is_empty() {
            return Err(AnalysisError::EmptyBoundary);
        }
        Ok(LogDomain { vertices: boundary.iter().map(|p| (p.r.ln(), p.theta)).collect() })
    }

    pub fn vertices(&self) -> &[(f64, f64)] {
        &self.vertices
    }

    /// Minimum Euclidean distance from a point of H (mapped into log
    /// coordinates) to the polyline. The polyline is treated as closed:
    /// the segment from the last vertex back to the first is included.
    pub fn distance_from(&self, p: PolarPoint) -> f64 {
        let q = (p.r.ln(), p.theta);
        if self.vertices.len() == 1 {
            let v = self.vertices[0];
            return (q.0 - v.0).hypot(q.1 - v.1);
        }
        let mut best = f64::INFINITY;
        for k in 0..self.vertices.len() {
            let a = self.vertices[k];
            let b = self.vertices[(k + 1) % self.vertices.len()];
            best = best.min(point_segment_distance(q, a, b));
        }
        best
    }
}

fn point_segment_distance(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (abx, aby) = (b.0 - a.0, b.1 - a.1);
    let (apx, apy) = (p.0 - a.0, p.1 - a.1);
    let len_sq = abx * abx + aby * aby;
    let t = if len_sq == 0.0 { 0.0 } else { ((apx * abx + apy * aby) / len_sq).clamp(0.0, 1.0) };
    let (cx, cy) = (a.0 + t * abx, a.1 + t * aby);
    (p.0 - cx).hypot(p.1 - cy)
}

/// The maximal admissible polar-disk radius around `center` inside a
/// domain whose boundary is the given polyline: the minimum over the
/// boundary of √((log(r/r₀))² + (θ−θ₀)²).
pub fn max_radius(center: PolarPoint, boundary: &[PolarPoint]) -> Result<f64, AnalysisError> {
    Ok(LogDomain::from_boundary(boundary)?.distance_from(center))
}

impl PolarDisk {
    /// Log-coordinate center x₀ + iy₀ = log r₀ + iθ₀.
    pub fn log_center(&self) -> Complex64 {
        self.center.log_coords()
    }
}
