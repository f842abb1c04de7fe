//! Polynomial text grammar, shared with the CLI.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := rational | variable | '(' expr ')' | '-' atom
//! rational := int ('/' int)?
//! ```
//!
//! Implicit multiplication is disallowed. In differential mode a variable
//! may carry derivative marks: `y''` or `y^(3)` (parenthesized order); a
//! bare `y^3` is the third power.

use super::{Poly, Var, VarOrder};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

/// Position-annotated parse error (byte offset into the input).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Int(BigInt),
    Ident(String, u32), // name plus trailing derivative quote count
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits");
                if i < bytes.len() && (bytes[i] as char).is_ascii_alphabetic() {
                    return err(i, "implicit multiplication is not allowed; use `*`");
                }
                toks.push((start, Tok::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let name = input[start..i].to_string();
                let mut quotes = 0;
                while i < bytes.len() && bytes[i] == b'\'' {
                    quotes += 1;
                    i += 1;
                }
                toks.push((start, Tok::Ident(name, quotes)));
            }
            _ => return err(i, format!("unexpected character `{}`", c)),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    order: &'a VarOrder,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term_signed()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term_signed(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.term()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()
            }
            _ => self.term(),
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            // `^ (n)` directly after a plain variable was consumed in atom();
            // here a caret always means a power with a bare natural number.
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e = nat_u32(&n, pos)?;
                    Ok(base.pow(e))
                }
                _ => err(pos, "expected a natural number exponent after `^`"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                // optional rational literal `p/q`
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    let dpos = self.here();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d == BigInt::from(0) {
                                return err(dpos, "zero denominator");
                            }
                            Ok(Poly::constant(BigRational::new(n, d)))
                        }
                        _ => err(dpos, "expected integer denominator after `/`"),
                    }
                } else {
                    Ok(Poly::constant(BigRational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name, quotes)) => self.variable(pos, name, quotes),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let pos = self.here();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => err(pos, "expected `)`"),
                }
            }
            Some(Tok::Minus) => Ok(self.atom()?.neg()),
            Some(t) => err(pos, format!("unexpected token {:?}", t)),
            None => err(pos, "unexpected end of input"),
        }
    }

    fn variable(&mut self, pos: usize, name: String, quotes: u32) -> Result<Poly, ParseError> {
        let idx = match self.order.index_of(&name) {
            Some(i) => i,
            None => return err(pos, format!("unknown variable `{}`", name)),
        };
        if !self.order.is_differential() {
            if quotes > 0 {
                return err(pos, "derivative marks are only valid in differential mode");
            }
            return Ok(Poly::var(Var::Base(idx)));
        }
        let mut order_count = quotes;
        // `y^(3)` — parenthesized derivative order (differential mode only)
        if quotes == 0
            && matches!(self.peek(), Some(Tok::Caret))
            && matches!(self.peek_at(1), Some(Tok::LParen))
        {
            self.bump(); // ^
            self.bump(); // (
            let npos = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    order_count = nat_u32(&n, npos)?;
                }
                _ => return err(npos, "expected derivative order"),
            }
            let cpos = self.here();
            match self.bump() {
                Some(Tok::RParen) => {}
                _ => return err(cpos, "expected `)` after derivative order"),
            }
        }
        Ok(Poly::var(Var::Deriv { base: idx, order: order_count }))
    }
}

fn nat_u32(n: &BigInt, pos: usize) -> Result<u32, ParseError> {
    use num_traits::ToPrimitive;
    match n.to_u32() {
        Some(v) => Ok(v),
        None => err(pos, "exponent out of range"),
    }
}

/// Parse one polynomial under the given variable order.
pub fn parse_poly(input: &str, order: &VarOrder) -> Result<Poly, ParseError> {
    let toks = tokenize(input)?;
    let mut p = Parser { toks, pos: 0, order, end: input.len() };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return err(p.here(), "trailing input");
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basics() {
        let ord = VarOrder::algebraic(vec!["x", "y", "z"]);
        let p = parse_poly("x*y*z + 1", &ord).unwrap();
        assert_eq!(p.to_string_with(&ord), "x*y*z + 1");
        let q = parse_poly("x^2 + x", &ord).unwrap();
        assert_eq!(q.to_string_with(&ord), "x^2 + x");
        let r = parse_poly("-3/2*x + (y - 1)^2", &ord).unwrap();
        assert_eq!(r.degree(ord.var("y").unwrap()), 2);
    }

    #[test]
    fn parse_rejects_implicit_mul() {
        let ord = VarOrder::algebraic(vec!["x", "y"]);
        assert!(parse_poly("2x", &ord).is_err());
        assert!(parse_poly("x y", &ord).is_err());
    }

    #[test]
    fn parse_unknown_var() {
        let ord = VarOrder::algebraic(vec!["x"]);
        let e = parse_poly("x + w", &ord).unwrap_err();
        assert!(e.msg.contains("unknown variable"));
        assert_eq!(e.pos, 4);
    }

    #[test]
    fn parse_derivatives() {
        let ord = VarOrder::differential(vec!["x", "y"]);
        let p = parse_poly("y'^2 - x*y^2", &ord).unwrap();
        let yp = Var::Deriv { base: 1, order: 1 };
        assert_eq!(p.degree(yp), 2);
        // y^(3) is a derivative, y^3 is a power
        let d = parse_poly("y^(3)", &ord).unwrap();
        assert_eq!(d, Poly::var(Var::Deriv { base: 1, order: 3 }));
        let pw = parse_poly("y^3", &ord).unwrap();
        assert_eq!(pw, Poly::var_pow(Var::Deriv { base: 1, order: 0 }, 3));
        // both spellings accepted
        assert_eq!(
            parse_poly("y1''", &VarOrder::differential(vec!["y1", "y2"])).unwrap(),
            Poly::var(Var::Deriv { base: 0, order: 2 })
        );
    }

    #[test]
    fn roundtrip_canonical() {
        let ord = VarOrder::algebraic(vec!["x", "y", "z"]);
        for s in ["x*y*z + 1", "x^2 + x", "2*x*y^2 - 1/3*z + 7", "0", "-x + 1"] {
            let p = parse_poly(s, &ord).unwrap();
            let printed = p.to_string_with(&ord);
            let q = parse_poly(&printed, &ord).unwrap();
            assert_eq!(p, q, "roundtrip failed for {}", s);
        }
    }
}
