//! The expression language in which all functions are supplied.
//!
//! Functions of the half-plane are written in the two real variables `r`
//! and `theta` (with the shorthands `z` for `r*exp(i*theta)` and `L` for
//! `log(r) + i*theta`); one-variable functions are written in `x` (or a
//! caller-chosen name such as `t` for curve parametrizations). Evaluation
//! is complex-valued throughout, with a principal-branch `log`.

mod lexer;
mod parser;
mod printer;

use std::fmt;

use num_complex::Complex64;

pub use parser::{parse, parse_one_var, parse_one_var_named, ParseError};

/// A point (r, θ) of the half-plane H = {(r, θ) : r > 0, θ ∈ ℝ}.
///
/// θ is an ordinary Cartesian coordinate here: there is no 2π periodicity,
/// so (1, 0) and (1, 2π) are different points of H.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub r: f64,
    pub theta: f64,
}

impl PolarPoint {
    /// Panics unless `r > 0` and both coordinates are finite.
    pub fn new(r: f64, theta: f64) -> Self {
        Self::try_new(r, theta)
            .unwrap_or_else(|| panic!("PolarPoint requires finite r > 0, got ({r}, {theta})"))
    }

    pub fn try_new(r: f64, theta: f64) -> Option<Self> {
        (r > 0.0 && r.is_finite() && theta.is_finite()).then_some(Self { r, theta })
    }

    /// The complex number re^{iθ} the point projects to.
    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(self.r, self.theta)
    }

    /// Image under the log-coordinate chart (r, θ) ↦ log r + iθ.
    pub fn log_coords(self) -> Complex64 {
        Complex64::new(self.r.ln(), self.theta)
    }

    /// Euclidean distance in the (r, θ) plane.
    pub fn distance(self, other: PolarPoint) -> f64 {
        (self.r - other.r).hypot(self.theta - other.theta)
    }
}

impl fmt::Display for PolarPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.theta)
    }
}

/// Immutable syntax tree for complex-valued functions of (r, θ) or of one
/// real variable.
///
/// The parse-time shorthands `z` and `L` are expanded into these primitive
/// nodes, so a tree obtained from [`parse`] never contains them.
#[derive(Debug, Clone, PartialEq)]
pub enum Expression {
    Const(Complex64),
    VarR,
    VarTheta,
    /// The variable of one-variable mode (`x`, or `t` in curve specs).
    VarX,
    Neg(Box<Expression>),
    Add(Box<Expression>, Box<Expression>),
    Sub(Box<Expression>, Box<Expression>),
    Mul(Box<Expression>, Box<Expression>),
    Div(Box<Expression>, Box<Expression>),
    Pow(Box<Expression>, Box<Expression>),
    Exp(Box<Expression>),
    /// Principal branch.
    Log(Box<Expression>),
    Sin(Box<Expression>),
    Cos(Box<Expression>),
    Sinh(Box<Expression>),
    Cosh(Box<Expression>),
}

impl Expression {
    pub fn constant(c: impl Into<Complex64>) -> Self {
        Expression::Const(c.into())
    }

    /// The exponent form that evaluates by repeated multiplication:
    /// a constant, real, non-negative integer.
    fn as_nonneg_integer(&self) -> Option<u64> {
        match self {
            Expression::Const(c)
                if c.im == 0.0
                    && c.re.is_finite()
                    && c.re >= 0.0
                    && c.re.fract() == 0.0
                    && c.re <= u64::MAX as f64 =>
            {
                Some(c.re as u64)
            }
            _ => None,
        }
    }

    /// Substitutes θ := 0 and renames r to the one-variable x, producing
    /// the restriction φ(x) = f(x, 0) to the positive real axis.
    pub fn restrict_to_positive_axis(&self) -> Expression {
        use Expression::*;
        let map = |e: &Expression| Box::new(e.restrict_to_positive_axis());
        match self {
            Const(c) => Const(*c),
            VarR => VarX,
            VarTheta => Const(Complex64::new(0.0, 0.0)),
            VarX => VarX,
            Neg(a) => Neg(map(a)),
            Add(a, b) => Add(map(a), map(b)),
            Sub(a, b) => Sub(map(a), map(b)),
            Mul(a, b) => Mul(map(a), map(b)),
            Div(a, b) => Div(map(a), map(b)),
            Pow(a, b) => Pow(map(a), map(b)),
            Exp(a) => Exp(map(a)),
            Log(a) => Log(map(a)),
            Sin(a) => Sin(map(a)),
            Cos(a) => Cos(map(a)),
            Sinh(a) => Sinh(map(a)),
            Cosh(a) => Cosh(map(a)),
        }
    }
}

/// Errors surfaced while evaluating an expression at a point.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("logarithm of zero")]
    LogOfZero,
    #[error("variable `{0}` is not available in this evaluation mode")]
    VariableNotInScope(&'static str),
}

/// The arithmetic an expression is evaluated in: plain complex numbers, or
/// complex numbers carrying derivative slots (see `Dual1`).
pub trait EvalScalar:
    Copy
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
    + std::ops::Neg<Output = Self>
{
    fn from_complex(c: Complex64) -> Self;
    /// The function value, with any derivative information dropped.
    fn value(&self) -> Complex64;
    fn exp(self) -> Self;
    /// Principal branch.
    fn ln(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;

    /// Integer power by repeated multiplication (binary exponentiation).
    fn powu(self, n: u64) -> Self {
        let mut acc = Self::from_complex(Complex64::new(1.0, 0.0));
        let mut base = self;
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            k >>= 1;
            if k > 0 {
                base = base * base;
            }
        }
        acc
    }
}

impl EvalScalar for Complex64 {
    fn from_complex(c: Complex64) -> Self {
        c
    }
    fn value(&self) -> Complex64 {
        *self
    }
    fn exp(self) -> Self {
        Complex64::exp(self)
    }
    fn ln(self) -> Self {
        Complex64::ln(self)
    }
    fn sin(self) -> Self {
        Complex64::sin(self)
    }
    fn cos(self) -> Self {
        Complex64::cos(self)
    }
    fn sinh(self) -> Self {
        Complex64::sinh(self)
    }
    fn cosh(self) -> Self {
        Complex64::cosh(self)
    }
}

/// Variable bindings for one evaluation. `None` marks a variable that is
/// out of scope in the current mode.
#[derive(Clone, Copy)]
pub struct Bindings<T> {
    pub r: Option<T>,
    pub theta: Option<T>,
    pub x: Option<T>,
}

impl<T: EvalScalar> Bindings<T> {
    pub fn polar(r: T, theta: T) -> Self {
        Bindings { r: Some(r), theta: Some(theta), x: None }
    }

    pub fn one_var(x: T) -> Self {
        Bindings { r: None, theta: None, x: Some(x) }
    }
}

fn is_zero<T: EvalScalar>(v: &T) -> bool {
    v.value().norm_sqr() == 0.0
}

/// Evaluates an expression in any scalar arithmetic.
pub fn eval_in<T: EvalScalar>(e: &Expression, vars: &Bindings<T>) -> Result<T, EvalError> {
    use Expression::*;
    match e {
        Const(c) => Ok(T::from_complex(*c)),
        VarR => vars.r.ok_or(EvalError::VariableNotInScope("r")),
        VarTheta => vars.theta.ok_or(EvalError::VariableNotInScope("theta")),
        VarX => vars.x.ok_or(EvalError::VariableNotInScope("x")),
        Neg(a) => Ok(-eval_in(a, vars)?),
        Add(a, b) => Ok(eval_in(a, vars)? + eval_in(b, vars)?),
        Sub(a, b) => Ok(eval_in(a, vars)? - eval_in(b, vars)?),
        Mul(a, b) => Ok(eval_in(a, vars)? * eval_in(b, vars)?),
        Div(a, b) => {
            let num = eval_in(a, vars)?;
            let den = eval_in(b, vars)?;
            if is_zero(&den) {
                return Err(EvalError::DivisionByZero);
            }
            Ok(num / den)
        }
        Pow(base, exponent) => {
            let b = eval_in(base, vars)?;
            match exponent.as_nonneg_integer() {
                Some(n) => Ok(b.powu(n)),
                None => {
                    let p = eval_in(exponent, vars)?;
                    if is_zero(&b) {
                        return Err(EvalError::LogOfZero);
                    }
                    Ok((p * b.ln()).exp())
                }
            }
        }
        Exp(a) => Ok(eval_in(a, vars)?.exp()),
        Log(a) => {
            let v = eval_in(a, vars)?;
            if is_zero(&v) {
                return Err(EvalError::LogOfZero);
            }
            Ok(v.ln())
        }
        Sin(a) => Ok(eval_in(a, vars)?.sin()),
        Cos(a) => Ok(eval_in(a, vars)?.cos()),
        Sinh(a) => Ok(eval_in(a, vars)?.sinh()),
        Cosh(a) => Ok(eval_in(a, vars)?.cosh()),
    }
}

/// Evaluates a polar-mode expression at a point of H.
pub fn eval(e: &Expression, p: PolarPoint) -> Result<Complex64, EvalError> {
    eval_in(
        e,
        &Bindings::polar(Complex64::new(p.r, 0.0), Complex64::new(p.theta, 0.0)),
    )
}

/// Evaluates a one-variable expression at x.
pub fn eval_one_var(e: &Expression, x: f64) -> Result<Complex64, EvalError> {
    eval_in(e, &Bindings::one_var(Complex64::new(x, 0.0)))
}
