//! Regular curves in H, the line integral ∫ f(r,θ)·e^{iθ}(dr + ir·dθ),
//! path-independence checks and the rectangle (Morera-style) scan.

mod curve;
mod integral;
mod quad;

pub use curve::{Curve, CurveError, CurveEvalFailure, CurveParseError, PathPoint, Piece, PieceKind};
pub use integral::{
    line_integral, morera_scan, path_independence_check, IntegralResult, IntegrationError,
    IntegrationOptions, MoreraReport, PathIndependenceReport,
};
