//! Polynomial literals: parser and the matching serializer.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr    := [+|-] term { (+|-) term }
//! term    := unary { [*|/] unary }        juxtaposition means *
//! unary   := - unary | power
//! power   := primary [ ^ integer ]
//! primary := integer | name | ( expr )
//! ```
//!
//! `w` is ζ. Division is only allowed by nonzero constants.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::eisenstein::Eisenstein;
use super::mpoly::{MPoly, Monomial};
use super::var::Var;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        if ch.is_ascii_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = s[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                i += 1;
            }
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Name(s[start..i].to_string())));
        } else if "+-*/^()".contains(ch) {
            out.push((i, Tok::Sym(ch)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character '{ch}'") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let pos = self.pos();
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Parse { pos, msg: "division by a non-constant or zero".into() });
                }
                acc = acc.scale(&d.constant_term().inv()?);
            } else if matches!(self.peek(), Some(Tok::Int(_) | Tok::Name(_) | Tok::Sym('('))) {
                acc = &acc * &self.unary()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        let base = self.primary()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                    self.i += 1;
                    Ok(base.pow(e))
                }
                _ => self.err("expected exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<MPoly> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.i += 1;
                Ok(MPoly::constant(Eisenstein::rational(BigRational::from_integer(n))))
            }
            Some(Tok::Name(name)) => {
                self.i += 1;
                if name == "w" {
                    Ok(MPoly::constant(Eisenstein::zeta()))
                } else {
                    Ok(MPoly::var(Var::parse(&name)?))
                }
            }
            Some(Tok::Sym('(')) => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(Tok::Sym(c)) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial literal.
pub fn parse_poly(text: &str) -> Result<MPoly> {
    let toks = lex(text)?;
    let mut p = Parser { toks, i: 0, end: text.len() };
    let out = p.expr()?;
    if p.i != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

impl std::str::FromStr for MPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<MPoly> {
        parse_poly(s)
    }
}

/// Parses a scalar literal (a constant polynomial).
pub fn parse_scalar(text: &str) -> Result<Eisenstein> {
    let p = parse_poly(text)?;
    if !p.is_constant() {
        return Err(Error::Parse { pos: 0, msg: "expected a constant".into() });
    }
    Ok(p.constant_term())
}

fn is_negative(c: &Eisenstein) -> bool {
    use num_traits::Signed;
    c.is_simple_literal() && (c.re_part().is_negative() || (c.re_part().is_zero() && c.zeta_part().is_negative()))
}

fn fmt_monomial(m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for v in Var::all() {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let neg = is_negative(c);
            let c = if neg { -c } else { c.clone() };
            match (k == 0, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    write!(f, "{c}*")?;
                }
                fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::ys;

    #[test]
    fn parses_cubic_c() {
        let [y1, y2, y3] = ys();
        let c = &(&(&y1.pow(2) * &y2) + &(&y2.pow(2) * &y3)) + &(&y3.pow(2) * &y1);
        assert_eq!(parse_poly("y1^2*y2 + y2^2*y3 + y3^2*y1").unwrap(), c);
        assert_eq!(parse_poly("y1^2 y2+y2^2y3 +y3^2*y1").unwrap(), c);
    }

    #[test]
    fn zeta_minimal_polynomial_is_zero() {
        assert!(parse_poly("w^2 + w + 1").unwrap().is_zero());
    }

    #[test]
    fn specialize_pencil_parameter() {
        let p = parse_poly("y1 + y2 - 2*l1*y3").unwrap();
        let q = p.substitute(Var::L1, &Eisenstein::one());
        assert_eq!(q, parse_poly("y1+y2-2y3").unwrap());
    }

    #[test]
    fn rationals_and_errors() {
        let p = parse_poly("-1/2*y1 + (1+2w)/3").unwrap();
        assert_eq!(p.to_string(), "-1/2*y1 + (1/3 + 2/3*w)");
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        assert!(matches!(parse_poly("y1 + q7"), Err(Error::UnknownVariable(_))));
        assert!(matches!(parse_poly("y1 + * y2"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_poly("y1 / y2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("(y1"), Err(Error::Parse { pos: 3, .. })));
    }

    #[test]
    fn display_shapes() {
        assert_eq!(parse_poly("-y1^2*y2 + w*y3 - 3").unwrap().to_string(), "-y1^2*y2 + w*y3 - 3");
        assert_eq!(MPoly::zero().to_string(), "0");
    }
}
