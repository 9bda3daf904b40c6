//! Canonical printing. For any tree produced by the parser,
//! `parse(print(e))` is structurally identical to `e`; programmatically
//! built trees with arbitrary finite complex constants still print to
//! parseable, value-equivalent text.

use std::fmt;

use num_complex::Complex64;

use super::Expression;

// Grammar levels: expr = 1, term = 2, factor = 3, unary = 4, atom = 5.
// A node is parenthesized when its own level is below what the syntactic
// position requires.
const LVL_EXPR: u8 = 1;
const LVL_TERM: u8 = 2;
const LVL_FACTOR: u8 = 3;
const LVL_UNARY: u8 = 4;
const LVL_ATOM: u8 = 5;

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        write_node(self, LVL_EXPR, &mut out);
        f.write_str(&out)
    }
}

fn level_of(e: &Expression) -> u8 {
    use Expression::*;
    match e {
        Const(c) => const_level(*c),
        VarR | VarTheta | VarX => LVL_ATOM,
        Add(..) | Sub(..) => LVL_EXPR,
        Mul(..) | Div(..) => LVL_TERM,
        Pow(..) => LVL_FACTOR,
        Neg(..) => LVL_UNARY,
        Exp(..) | Log(..) | Sin(..) | Cos(..) | Sinh(..) | Cosh(..) => LVL_ATOM,
    }
}

fn write_node(e: &Expression, min: u8, out: &mut String) {
    if level_of(e) < min {
        out.push('(');
        write_bare(e, out);
        out.push(')');
    } else {
        write_bare(e, out);
    }
}

fn write_bare(e: &Expression, out: &mut String) {
    use Expression::*;
    match e {
        Const(c) => write_const(*c, out),
        VarR => out.push('r'),
        VarTheta => out.push_str("theta"),
        VarX => out.push('x'),
        Add(a, b) => {
            write_node(a, LVL_EXPR, out);
            out.push_str(" + ");
            write_node(b, LVL_TERM, out);
        }
        Sub(a, b) => {
            write_node(a, LVL_EXPR, out);
            out.push_str(" - ");
            write_node(b, LVL_TERM, out);
        }
        Mul(a, b) => {
            write_node(a, LVL_TERM, out);
            out.push('*');
            write_node(b, LVL_FACTOR, out);
        }
        Div(a, b) => {
            write_node(a, LVL_TERM, out);
            out.push('/');
            write_node(b, LVL_FACTOR, out);
        }
        Pow(a, b) => {
            write_node(a, LVL_UNARY, out);
            out.push('^');
            write_node(b, LVL_FACTOR, out);
        }
        Neg(a) => {
            out.push('-');
            write_node(a, LVL_UNARY, out);
        }
        Exp(a) => write_call("exp", a, out),
        Log(a) => write_call("log", a, out),
        Sin(a) => write_call("sin", a, out),
        Cos(a) => write_call("cos", a, out),
        Sinh(a) => write_call("sinh", a, out),
        Cosh(a) => write_call("cosh", a, out),
    }
}

fn write_call(name: &str, arg: &Expression, out: &mut String) {
    out.push_str(name);
    out.push('(');
    write_node(arg, LVL_EXPR, out);
    out.push(')');
}

/// The level at which a constant's textual form re-parses: plain
/// non-negative reals and `i` are atoms, negated forms parse as unary
/// nodes, imaginary multiples as terms, and the general complex form is
/// emitted with its own parentheses.
fn const_level(c: Complex64) -> u8 {
    if c.im == 0.0 {
        if c.re >= 0.0 || c.re.is_nan() {
            LVL_ATOM
        } else {
            LVL_UNARY
        }
    } else if c.re == 0.0 {
        match c.im {
            1.0 => LVL_ATOM,
            -1.0 => LVL_UNARY,
            im if im > 0.0 => LVL_TERM,
            _ => LVL_TERM,
        }
    } else {
        LVL_ATOM
    }
}

fn write_const(c: Complex64, out: &mut String) {
    use std::fmt::Write;
    if c.im == 0.0 {
        // 0.0 also covers -0.0 under `==`; print the canonical "0".
        if c.re == 0.0 {
            out.push('0');
        } else {
            let _ = write!(out, "{}", c.re);
        }
    } else if c.re == 0.0 {
        match c.im {
            1.0 => out.push('i'),
            -1.0 => out.push_str("-i"),
            im => {
                let _ = write!(out, "{im}*i");
            }
        }
    } else if c.im > 0.0 {
        let _ = write!(out, "({} + {}*i)", c.re, c.im);
    } else {
        let _ = write!(out, "({} - {}*i)", c.re, -c.im);
    }
}
