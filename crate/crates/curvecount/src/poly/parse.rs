//! Recursive-descent parser for the polynomial expression grammar:
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := int | 'X' | 'Y' | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. A unary minus is allowed before the first
//! term of an expression (and after an opening parenthesis).

use crate::error::{Error, Result};
use crate::ring::Ring;

use super::{BivariatePoly, UnivariatePoly};

const MAX_EXPONENT: u32 = 65_535;

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Int(String),
    VarX,
    VarY,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer '{}'", s),
            Tok::VarX => "'X'".into(),
            Tok::VarY => "'Y'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'X' => {
                out.push((i, Tok::VarX));
                i += 1;
            }
            b'Y' => {
                out.push((i, Tok::VarY));
                i += 1;
            }
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            b'^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].to_string())));
            }
            _ => {
                return Err(Error::ParseError {
                    offset: i,
                    expected: "integer, 'X', 'Y', operator, or parenthesis".into(),
                    found: format!("'{}'", text[i..].chars().next().unwrap()),
                })
            }
        }
    }
    out.push((text.len(), Tok::Eof));
    Ok(out)
}

struct Parser<'r, R: Ring> {
    ring: &'r R,
    tokens: Vec<(usize, Tok)>,
    pos: usize,
}

impl<'r, R: Ring> Parser<'r, R> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.pos].1.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: &str) -> Error {
        Error::ParseError {
            offset: self.offset(),
            expected: expected.into(),
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<BivariatePoly<R>> {
        let mut acc = if *self.peek() == Tok::Minus {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BivariatePoly<R>> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BivariatePoly<R>> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let off = self.offset();
        let e = match self.bump() {
            Tok::Int(s) => s.parse::<u32>().ok().filter(|&e| e <= MAX_EXPONENT).ok_or(
                Error::ParseError {
                    offset: off,
                    expected: format!("exponent in [0, {}]", MAX_EXPONENT),
                    found: format!("'{}'", s),
                },
            )?,
            t => {
                return Err(Error::ParseError {
                    offset: off,
                    expected: "unsigned integer exponent".into(),
                    found: t.describe(),
                })
            }
        };
        Ok(pow(&base, e))
    }

    fn base(&mut self) -> Result<BivariatePoly<R>> {
        let off = self.offset();
        match self.bump() {
            Tok::Int(s) => {
                let c = self.ring.from_decimal(&s).ok_or(Error::ParseError {
                    offset: off,
                    expected: "integer literal".into(),
                    found: format!("'{}'", s),
                })?;
                Ok(BivariatePoly::constant(self.ring.clone(), c))
            }
            Tok::VarX => Ok(BivariatePoly::monomial(self.ring.clone(), self.ring.one(), 1, 0)),
            Tok::VarY => Ok(BivariatePoly::monomial(self.ring.clone(), self.ring.one(), 0, 1)),
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.err("')'"));
                }
                self.bump();
                Ok(inner)
            }
            t => Err(Error::ParseError {
                offset: off,
                expected: "integer, 'X', 'Y', or '('".into(),
                found: t.describe(),
            }),
        }
    }
}

fn pow<R: Ring>(base: &BivariatePoly<R>, mut e: u32) -> BivariatePoly<R> {
    let mut acc = BivariatePoly::constant(base.ring().clone(), base.ring().one());
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b);
        }
        e >>= 1;
        if e > 0 {
            b = b.mul(&b);
        }
    }
    acc
}

/// Parse an expression over the given coefficient ring into a canonical
/// sparse polynomial.
pub fn parse_poly<R: Ring>(text: &str, ring: &R) -> Result<BivariatePoly<R>> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        ring,
        tokens,
        pos: 0,
    };
    let poly = parser.expr()?;
    if *parser.peek() != Tok::Eof {
        return Err(parser.err("operator or end of input"));
    }
    Ok(poly)
}

/// Parse an expression that must use only the variable X, as a univariate
/// polynomial.
pub fn parse_univariate_x<R: Ring>(text: &str, ring: &R) -> Result<UnivariatePoly<R>> {
    let poly = parse_poly(text, ring)?;
    if poly.deg_y().unwrap_or(0) > 0 {
        return Err(Error::invalid(
            "univariate polynomial",
            format!("'{}' uses Y; only X is allowed here", text.trim()),
        ));
    }
    let mut coeffs = vec![ring.zero(); poly.deg_x().unwrap_or(0) as usize + 1];
    for (&(i, _), c) in poly.terms() {
        coeffs[i as usize] = c.clone();
    }
    Ok(UnivariatePoly::from_coeffs(ring.clone(), coeffs))
}
