//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expression := '-'? term (('+' | '-') term)*
//! term       := factor ('*' factor)*
//! factor     := rational | variable ('^' natural)? | '(' expression ')'
//! rational   := integer ('/' natural)?
//! ```
//!
//! Whitespace (including newlines) is insignificant; juxtaposition such as
//! `2x0` is an error. Positions are one-based.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Polynomial, RingRef};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(n) => format!("number {n}"),
            Tok::Ident(v) => format!("identifier {v}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str, line0: usize, col0: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (line0, col0);
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = (line, column);
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                i += 1;
            }
            Tok::Number(s)
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                s.push(chars[i]);
                i += 1;
            }
            Tok::Ident(s)
        } else {
            i += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => {
                    return Err(ParseError { line, column, message: format!("unexpected character '{c}'") });
                }
            }
        };
        let width = match &tok {
            Tok::Number(s) | Tok::Ident(s) => s.chars().count(),
            _ => 1,
        };
        column += width;
        out.push(Token { tok, line: start.0, column: start.1 });
    }
    out.push(Token { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a RingRef,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> &Token {
        let t = &self.tokens[self.pos];
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Token, message: impl Into<String>) -> ParseError {
        ParseError { line: t.line, column: t.column, message: message.into() }
    }

    fn expression(&mut self) -> Result<Polynomial, ParseError> {
        let negate = self.peek().tok == Tok::Minus;
        if negate {
            self.next();
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.next();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn natural(&mut self, what: &str, anchor: (usize, usize)) -> Result<BigInt, ParseError> {
        match &self.peek().tok {
            Tok::Number(n) => {
                let n: BigInt = n.parse().expect("digits");
                self.next();
                Ok(n)
            }
            other => Err(ParseError {
                line: anchor.0,
                column: anchor.1,
                message: format!("expected {what}, found {}", other.describe()),
            }),
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let t = self.next();
        let (line, column) = (t.line, t.column);
        match t.tok.clone() {
            Tok::Number(n) => {
                let numer: BigInt = n.parse().expect("digits");
                let mut value = BigRational::from_integer(numer);
                if self.peek().tok == Tok::Slash {
                    let slash = (self.peek().line, self.peek().column);
                    self.next();
                    let den = self.natural("a natural denominator after '/'", slash)?;
                    if den.is_zero() {
                        return Err(ParseError { line: slash.0, column: slash.1, message: "zero denominator".into() });
                    }
                    value /= BigRational::from_integer(den);
                }
                let c = self.ring.domain().from_rational(&value).map_err(|e| ParseError {
                    line,
                    column,
                    message: format!("malformed rational: {e}"),
                })?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Tok::Ident(name) => {
                let idx = self.ring.variable_index(&name).ok_or_else(|| ParseError {
                    line,
                    column,
                    message: format!("unknown variable {name}"),
                })?;
                let var = Polynomial::var(self.ring, idx);
                if self.peek().tok == Tok::Caret {
                    let caret = (self.peek().line, self.peek().column);
                    self.next();
                    let e = self.natural("a natural exponent after '^'", caret)?;
                    let e: u32 = u32::try_from(e).map_err(|_| ParseError {
                        line: caret.0,
                        column: caret.1,
                        message: "exponent too large".into(),
                    })?;
                    return Ok(var.pow(e));
                }
                Ok(var)
            }
            Tok::LParen => {
                let inner = self.expression()?;
                let close = self.next();
                if close.tok != Tok::RParen {
                    return Err(Self::error_at(close, format!("expected ')', found {}", close.tok.describe())));
                }
                Ok(inner)
            }
            other => Err(ParseError { line, column, message: format!("expected a factor, found {}", other.describe()) }),
        }
    }
}

/// Parses `text` in `ring`.
pub fn parse_polynomial(text: &str, ring: &RingRef) -> Result<Polynomial, ParseError> {
    parse_polynomial_at(text, ring, 1, 1)
}

/// Like [`parse_polynomial`], reporting positions relative to a text that
/// starts at `(line, column)` of an enclosing file.
pub fn parse_polynomial_at(text: &str, ring: &RingRef, line: usize, column: usize) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(text, line, column)?;
    let mut p = Parser { tokens, pos: 0, ring };
    let out = p.expression()?;
    let t = p.peek();
    if t.tok != Tok::End {
        let hint = if matches!(t.tok, Tok::Ident(_) | Tok::Number(_) | Tok::LParen) {
            " (implicit multiplication is not allowed)"
        } else {
            ""
        };
        return Err(Parser::error_at(t, format!("unexpected {}{hint}", t.tok.describe())));
    }
    Ok(out)
}
