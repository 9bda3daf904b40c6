//! Recursive-descent parser for the expression grammar:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := unary ("^" factor)?            (right-associative)
//! unary  := "-" unary | atom
//! atom   := NUMBER | "i" | "r" | "theta" | "x" | "z" | "L"
//!         | IDENT "(" expr ")" | "(" expr ")"
//! IDENT  := exp | log | sin | cos | sinh | cosh
//! ```
//!
//! `z` expands to `r*exp(i*theta)` and `L` to `log(r) + i*theta` at parse
//! time. Identifiers are case-sensitive. In one-variable mode the polar
//! names are out of scope and a single variable name (default `x`) is
//! accepted instead.

use num_complex::Complex64;

use super::lexer::{tokenize, Token, TokenKind};
use super::Expression;

const MAX_DEPTH: usize = 200;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: found {found}, expected {}", expected.join(", "))]
    Syntax {
        offset: usize,
        found: String,
        expected: Vec<&'static str>,
    },
    #[error("unknown identifier `{name}` at byte {offset}")]
    UnknownIdentifier { offset: usize, name: String },
    #[error("invalid numeric literal at byte {offset}")]
    InvalidNumber { offset: usize },
    #[error("expression nesting exceeds depth {MAX_DEPTH} at byte {offset}")]
    TooDeep { offset: usize },
}

impl ParseError {
    /// Shifts reported byte offsets, for parsers embedding expression
    /// sources inside a larger input (the curve mini-language).
    pub fn offset_by(mut self, base: usize) -> Self {
        match &mut self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownIdentifier { offset, .. }
            | ParseError::InvalidNumber { offset }
            | ParseError::TooDeep { offset } => *offset += base,
        }
        self
    }
}

#[derive(Clone, Copy)]
enum Mode<'a> {
    Polar,
    OneVar { name: &'a str },
}

/// Parses an expression in the polar variables (r, theta, z, L).
pub fn parse(source: &str) -> Result<Expression, ParseError> {
    Parser::new(source, Mode::Polar)?.run()
}

/// Parses a one-variable expression in `x`.
pub fn parse_one_var(source: &str) -> Result<Expression, ParseError> {
    parse_one_var_named(source, "x")
}

/// Parses a one-variable expression with a caller-chosen variable name.
pub fn parse_one_var_named(source: &str, var: &str) -> Result<Expression, ParseError> {
    Parser::new(source, Mode::OneVar { name: var })?.run()
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    mode: Mode<'a>,
}

impl<'a> Parser<'a> {
    fn new(source: &str, mode: Mode<'a>) -> Result<Self, ParseError> {
        Ok(Parser { tokens: tokenize(source)?, pos: 0, mode })
    }

    fn run(mut self) -> Result<Expression, ParseError> {
        let e = self.expr(0)?;
        match self.peek().kind {
            TokenKind::Eof => Ok(e),
            _ => Err(self.unexpected(&["`+`", "`-`", "`*`", "`/`", "`^`", "end of input"])),
        }
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        let t = self.peek();
        ParseError::Syntax {
            offset: t.offset,
            found: t.kind.describe(),
            expected: expected.to_vec(),
        }
    }

    fn expr(&mut self, depth: usize) -> Result<Expression, ParseError> {
        self.check_depth(depth)?;
        let mut lhs = self.term(depth + 1)?;
        loop {
            match self.peek().kind {
                TokenKind::Plus => {
                    self.bump();
                    let rhs = self.term(depth + 1)?;
                    lhs = Expression::Add(Box::new(lhs), Box::new(rhs));
                }
                TokenKind::Minus => {
                    self.bump();
                    let rhs = self.term(depth + 1)?;
                    lhs = Expression::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<Expression, ParseError> {
        self.check_depth(depth)?;
        let mut lhs = self.factor(depth + 1)?;
        loop {
            match self.peek().kind {
                TokenKind::Star => {
                    self.bump();
                    let rhs = self.factor(depth + 1)?;
                    lhs = Expression::Mul(Box::new(lhs), Box::new(rhs));
                }
                TokenKind::Slash => {
                    self.bump();
                    let rhs = self.factor(depth + 1)?;
                    lhs = Expression::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self, depth: usize) -> Result<Expression, ParseError> {
        self.check_depth(depth)?;
        let base = self.unary(depth + 1)?;
        if self.peek().kind == TokenKind::Caret {
            self.bump();
            let exponent = self.factor(depth + 1)?;
            Ok(Expression::Pow(Box::new(base), Box::new(exponent)))
        } else {
            Ok(base)
        }
    }

    fn unary(&mut self, depth: usize) -> Result<Expression, ParseError> {
        self.check_depth(depth)?;
        if self.peek().kind == TokenKind::Minus {
            self.bump();
            let inner = self.unary(depth + 1)?;
            Ok(Expression::Neg(Box::new(inner)))
        } else {
            self.atom(depth + 1)
        }
    }

    fn atom(&mut self, depth: usize) -> Result<Expression, ParseError> {
        self.check_depth(depth)?;
        match self.peek().kind.clone() {
            TokenKind::Number(v) => {
                self.bump();
                Ok(Expression::Const(Complex64::new(v, 0.0)))
            }
            TokenKind::LParen => {
                self.bump();
                let inner = self.expr(depth + 1)?;
                self.expect_rparen()?;
                Ok(inner)
            }
            TokenKind::Ident(name) => {
                let offset = self.peek().offset;
                self.bump();
                self.ident_atom(offset, &name, depth)
            }
            _ => Err(self.unexpected(&["number", "variable", "function", "`-`", "`(`"])),
        }
    }

    fn ident_atom(&mut self, offset: usize, name: &str, depth: usize) -> Result<Expression, ParseError> {
        // Function applications first; they are mode-independent.
        let function: Option<fn(Box<Expression>) -> Expression> = match name {
            "exp" => Some(Expression::Exp),
            "log" => Some(Expression::Log),
            "sin" => Some(Expression::Sin),
            "cos" => Some(Expression::Cos),
            "sinh" => Some(Expression::Sinh),
            "cosh" => Some(Expression::Cosh),
            _ => None,
        };
        if let Some(make) = function {
            if self.peek().kind != TokenKind::LParen {
                return Err(self.unexpected(&["`(`"]));
            }
            self.bump();
            let arg = self.expr(depth + 1)?;
            self.expect_rparen()?;
            return Ok(make(Box::new(arg)));
        }

        if name == "i" {
            return Ok(Expression::Const(Complex64::new(0.0, 1.0)));
        }

        match self.mode {
            Mode::Polar => match name {
                "r" => Ok(Expression::VarR),
                "theta" => Ok(Expression::VarTheta),
                "z" => Ok(expand_z()),
                "L" => Ok(expand_big_l()),
                _ => Err(ParseError::UnknownIdentifier { offset, name: name.to_string() }),
            },
            Mode::OneVar { name: var } if name == var => Ok(Expression::VarX),
            Mode::OneVar { .. } => {
                Err(ParseError::UnknownIdentifier { offset, name: name.to_string() })
            }
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        if self.peek().kind == TokenKind::RParen {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&["`)`"]))
        }
    }

    fn check_depth(&self, depth: usize) -> Result<(), ParseError> {
        if depth > MAX_DEPTH {
            Err(ParseError::TooDeep { offset: self.peek().offset })
        } else {
            Ok(())
        }
    }
}

/// z ≡ r*exp(i*theta)
fn expand_z() -> Expression {
    Expression::Mul(
        Box::new(Expression::VarR),
        Box::new(Expression::Exp(Box::new(Expression::Mul(
            Box::new(Expression::Const(Complex64::new(0.0, 1.0))),
            Box::new(Expression::VarTheta),
        )))),
    )
}

/// L ≡ log(r) + i*theta
fn expand_big_l() -> Expression {
    Expression::Add(
        Box::new(Expression::Log(Box::new(Expression::VarR))),
        Box::new(Expression::Mul(
            Box::new(Expression::Const(Complex64::new(0.0, 1.0))),
            Box::new(Expression::VarTheta),
        )),
    )
}
