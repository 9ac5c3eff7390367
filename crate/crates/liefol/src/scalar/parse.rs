//! Parser for the scalar expression grammar:
//!
//! ```text
//! expr   := '-'? term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' uint)?
//! atom   := uint | ident | '(' expr ')'
//! ```
//!
//! Expressions evaluate directly into [`Scalar`] values with exact
//! arithmetic, so `2*l^2/z2` parses to a rational function and `3/4` to a
//! rational constant.

use num::BigInt;
use thiserror::Error;

use super::{Rational, Scalar, ScalarError};

/// Largest accepted exponent; keeps pathological inputs from soaking CPU.
const MAX_EXPONENT: u32 = 512;

/// A parse failure, with the byte offset where it happened.
#[derive(Error, Clone, PartialEq, Eq, Debug)]
#[error("{kind} at offset {pos}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("expected {expected}, found `{found}`")]
    UnexpectedToken { expected: &'static str, found: String },
    #[error("unexpected end of input; expected {0}")]
    UnexpectedEnd(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent exceeds {MAX_EXPONENT}")]
    ExponentTooLarge,
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(n) => n.to_string(),
            Token::Ident(s) => s.clone(),
            Token::Plus => "+".into(),
            Token::Minus => "-".into(),
            Token::Star => "*".into(),
            Token::Slash => "/".into(),
            Token::Caret => "^".into(),
            Token::LParen => "(".into(),
            Token::RParen => ")".into(),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Token::Star));
                i += 1;
            }
            '/' => {
                toks.push((i, Token::Slash));
                i += 1;
            }
            '^' => {
                toks.push((i, Token::Caret));
                i += 1;
            }
            '(' => {
                toks.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digit run parses");
                toks.push((start, Token::Int(n)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Token::Ident(input[start..i].to_owned())));
            }
            other => {
                // Report at the char boundary even for multibyte input.
                let pos = input
                    .char_indices()
                    .find(|&(p, _)| p >= i)
                    .map(|(p, _)| p)
                    .unwrap_or(i);
                let ch = input[pos..].chars().next().unwrap_or(other);
                return Err(ParseError { pos, kind: ParseErrorKind::UnexpectedChar(ch) });
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Token)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.toks.get(self.i)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.toks.get(self.i).cloned();
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn err_here(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            Some((pos, tok)) => ParseError {
                pos: *pos,
                kind: ParseErrorKind::UnexpectedToken { expected, found: tok.describe() },
            },
            None => ParseError { pos: self.end, kind: ParseErrorKind::UnexpectedEnd(expected) },
        }
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = if matches!(self.peek(), Some((_, Token::Minus))) {
            self.next();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some((_, Token::Plus)) => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Some((_, Token::Minus)) => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some((_, Token::Star)) => {
                    self.next();
                    acc = &acc * &self.factor()?;
                }
                Some(&(pos, Token::Slash)) => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = acc.div(&rhs).map_err(|e| ParseError {
                        pos,
                        kind: match e {
                            ScalarError::DivisionByZero => ParseErrorKind::DivisionByZero,
                            ScalarError::MissingBinding(_) => unreachable!("parsing binds nothing"),
                        },
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some((_, Token::Caret))) {
            self.next();
            match self.next() {
                Some((pos, Token::Int(n))) => {
                    let exp: u32 = n
                        .try_into()
                        .ok()
                        .filter(|&e| e <= MAX_EXPONENT)
                        .ok_or(ParseError { pos, kind: ParseErrorKind::ExponentTooLarge })?;
                    Ok(base.pow(exp))
                }
                Some((pos, tok)) => Err(ParseError {
                    pos,
                    kind: ParseErrorKind::UnexpectedToken {
                        expected: "a non-negative integer exponent",
                        found: tok.describe(),
                    },
                }),
                None => Err(ParseError {
                    pos: self.end,
                    kind: ParseErrorKind::UnexpectedEnd("a non-negative integer exponent"),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Scalar, ParseError> {
        match self.peek().cloned() {
            Some((_, Token::Int(n))) => {
                self.next();
                Ok(Scalar::Rat(Rational::from_integer(n)))
            }
            Some((_, Token::Ident(name))) => {
                self.next();
                Ok(Scalar::var(&name))
            }
            Some((_, Token::LParen)) => {
                self.next();
                let inner = self.expr()?;
                if matches!(self.peek(), Some((_, Token::RParen))) {
                    self.next();
                    Ok(inner)
                } else {
                    Err(self.err_here("`)`"))
                }
            }
            _ => Err(self.err_here("a number, parameter, or `(`")),
        }
    }
}

/// Parses an expression in the scalar grammar into an exact [`Scalar`].
pub fn parse_scalar(input: &str) -> Result<Scalar, ParseError> {
    let toks = tokenize(input)?;
    let mut p = Parser { toks, i: 0, end: input.len() };
    let value = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err_here("end of input"));
    }
    Ok(value)
}
