//! Tokenizer for the expression grammar. Tokens carry byte offsets so the
//! parser can report precise error positions.

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum TokenKind {
    Number(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl TokenKind {
    pub(crate) fn describe(&self) -> String {
        match self {
            TokenKind::Number(n) => format!("number `{n}`"),
            TokenKind::Ident(s) => format!("identifier `{s}`"),
            TokenKind::Plus => "`+`".into(),
            TokenKind::Minus => "`-`".into(),
            TokenKind::Star => "`*`".into(),
            TokenKind::Slash => "`/`".into(),
            TokenKind::Caret => "`^`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub offset: usize,
}

/// Scans the whole source up front. Produces a trailing Eof token.
pub(crate) fn tokenize(source: &str) -> Result<Vec<Token>, super::ParseError> {
    let bytes = source.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => push_op(&mut tokens, TokenKind::Plus, &mut i),
            b'-' => push_op(&mut tokens, TokenKind::Minus, &mut i),
            b'*' => push_op(&mut tokens, TokenKind::Star, &mut i),
            b'/' => push_op(&mut tokens, TokenKind::Slash, &mut i),
            b'^' => push_op(&mut tokens, TokenKind::Caret, &mut i),
            b'(' => push_op(&mut tokens, TokenKind::LParen, &mut i),
            b')' => push_op(&mut tokens, TokenKind::RParen, &mut i),
            b'0'..=b'9' | b'.' => {
                let (value, len) = scan_number(&bytes[i..]).ok_or({
                    super::ParseError::InvalidNumber { offset: i }
                })?;
                if !value.is_finite() {
                    return Err(super::ParseError::InvalidNumber { offset: i });
                }
                tokens.push(Token { kind: TokenKind::Number(value), offset: i });
                i += len;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Ident(source[start..i].to_string()),
                    offset: start,
                });
            }
            _ => {
                return Err(super::ParseError::Syntax {
                    offset: i,
                    found: format!("character `{}`", source[i..].chars().next().unwrap()),
                    expected: vec!["number", "identifier", "operator", "`(`", "`)`"],
                });
            }
        }
    }
    tokens.push(Token { kind: TokenKind::Eof, offset: bytes.len() });
    Ok(tokens)
}

fn push_op(tokens: &mut Vec<Token>, kind: TokenKind, i: &mut usize) {
    tokens.push(Token { kind, offset: *i });
    *i += 1;
}

/// Unsigned float literal: digits, optional fraction, optional exponent.
/// A leading dot (".5") is accepted; a bare "." is not. The exponent
/// marker is consumed only when digits follow, so "2e" lexes as the
/// number 2 followed by the identifier `e`.
fn scan_number(bytes: &[u8]) -> Option<(f64, usize)> {
    let mut i = 0;
    let mut digits = false;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
        digits = true;
    }
    if i < bytes.len() && bytes[i] == b'.' {
        i += 1;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
            digits = true;
        }
    }
    if !digits {
        return None;
    }
    if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
        let mut j = i + 1;
        if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
            j += 1;
        }
        if j < bytes.len() && bytes[j].is_ascii_digit() {
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            i = j;
        }
    }
    let text = std::str::from_utf8(&bytes[..i]).ok()?;
    text.parse::<f64>().ok().map(|v| (v, i))
}
