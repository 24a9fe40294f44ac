//! Plain-text polynomial grammar: integer/rational coefficients, `+ - * ^ ( )`
//! and the variables `x y z`. Printing and parsing round-trip bit-exactly.

use super::{Monomial, Poly, Rat, Var};
use num::{BigInt, One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0} at token {1:?}")]
    Expected(&'static str, String),
    #[error("exponent out of range")]
    ExponentRange,
    #[error("denominator is zero")]
    ZeroDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<Token>, PolyParseError> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            'x' => {
                out.push(Token::Var(Var::X));
                i += 1;
            }
            'y' => {
                out.push(Token::Var(Var::Y));
                i += 1;
            }
            'z' => {
                out.push(Token::Var(Var::Z));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits parse");
                out.push(Token::Int(n));
            }
            other => return Err(PolyParseError::UnexpectedChar(other, i)),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // expr := ['-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Poly, PolyParseError> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.next();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<Poly, PolyParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.next();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    // factor := atom ('^' uint)?
    fn factor(&mut self) -> Result<Poly, PolyParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.next();
            match self.next() {
                Some(Token::Int(e)) => {
                    let e: u32 = e.try_into().map_err(|_| PolyParseError::ExponentRange)?;
                    return Ok(base.pow(e));
                }
                other => {
                    return Err(PolyParseError::Expected(
                        "nonnegative integer exponent",
                        format!("{other:?}"),
                    ))
                }
            }
        }
        Ok(base)
    }

    // atom := int ['/' int] | var | '(' expr ')'
    fn atom(&mut self) -> Result<Poly, PolyParseError> {
        match self.next() {
            Some(Token::Int(n)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.next();
                    match self.next() {
                        Some(Token::Int(d)) => {
                            if d.is_zero() {
                                return Err(PolyParseError::ZeroDenominator);
                            }
                            Ok(Poly::constant(Rat::new(n, d)))
                        }
                        other => Err(PolyParseError::Expected(
                            "integer denominator",
                            format!("{other:?}"),
                        )),
                    }
                } else {
                    Ok(Poly::constant(Rat::from_integer(n)))
                }
            }
            Some(Token::Var(v)) => Ok(Poly::var(v)),
            Some(Token::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(e),
                    other => Err(PolyParseError::Expected(")", format!("{other:?}"))),
                }
            }
            Some(other) => Err(PolyParseError::Expected(
                "number, variable or (",
                format!("{other:?}"),
            )),
            None => Err(PolyParseError::UnexpectedEnd),
        }
    }
}

pub fn parse_poly(input: &str) -> Result<Poly, PolyParseError> {
    let tokens = lex(input)?;
    let mut parser = Parser { tokens, pos: 0 };
    let poly = parser.expr()?;
    match parser.peek() {
        None => Ok(poly),
        Some(t) => Err(PolyParseError::Expected("end of input", format!("{t:?}"))),
    }
}

fn write_monomial(m: &Monomial, c: &Rat, lead: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mag = c.abs();
    let negative = c.is_negative();
    if lead {
        if negative {
            write!(f, "-")?;
        }
    } else if negative {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let is_const = m.x == 0 && m.y == 0 && m.z == 0;
    let mut printed_coeff = false;
    if !mag.is_one() || is_const {
        if mag.denom().is_one() {
            write!(f, "{}", mag.numer())?;
        } else {
            write!(f, "{}/{}", mag.numer(), mag.denom())?;
        }
        printed_coeff = true;
    }
    let mut first_var = !printed_coeff;
    for (v, e) in [(Var::X, m.x), (Var::Y, m.y), (Var::Z, m.z)] {
        if e == 0 {
            continue;
        }
        if !first_var || printed_coeff {
            write!(f, "*")?;
        }
        first_var = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

pub(super) fn write_poly(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    // descending lex order
    for (i, (m, c)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        write_monomial(m, c, i == 0, f)?;
    }
    Ok(())
}
