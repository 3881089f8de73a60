use num_bigint::BigInt;
use num_rational::BigRational;

use super::cpoly::CPoly;
use super::index::{Axis, Exps, Slot};
use crate::scalars::{Gauss, QScalar};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

/// Parse the series grammar, e.g. `(3/2 + i*q^2)*x+^2*x3 - y.x-`.
pub fn parse_cpoly(src: &str) -> Result<CPoly, ParseError> {
    let mut p = Parser { s: src.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Parse a scalar expression in `q` and `i`.
pub fn parse_scalar(src: &str) -> Result<QScalar, ParseError> {
    let p = parse_cpoly(src)?;
    if p.degree() > 0 {
        return Err(ParseError { pos: 0, msg: "scalar expected, found coordinates".into() });
    }
    Ok(p.coeff(&Exps::one()))
}

impl std::str::FromStr for CPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_cpoly(s)
    }
}

impl std::str::FromStr for QScalar {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<CPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<CPoly, ParseError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let at = self.pos;
            let f = self.unary()?;
            acc = if c == b'*' {
                &acc * &f
            } else {
                let d = as_scalar(&f).ok_or(ParseError { pos: at, msg: "division by a non-scalar".into() })?;
                let inv = d.try_inv().map_err(|e| ParseError { pos: at, msg: e.to_string() })?;
                acc.scale(&inv)
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<CPoly, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<CPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let e = self.signed_int()?;
        if e >= 0 {
            let mut acc = CPoly::one();
            for _ in 0..e {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        let s = as_scalar(&base).ok_or(ParseError { pos: at, msg: "negative power of a non-scalar".into() })?;
        let v = s.powi(e).map_err(|er| ParseError { pos: at, msg: er.to_string() })?;
        Ok(CPoly::constant(v))
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let mut neg = false;
        if self.peek() == Some(b'-') {
            neg = true;
            self.pos += 1;
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("integer exponent expected"));
        }
        let v: i64 = std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<CPoly, ParseError> {
        let c = self.peek().ok_or_else(|| self.err("unexpected end of input"))?;
        match c {
            b'(' => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap();
                Ok(CPoly::constant(QScalar::from_rat(BigRational::from_integer(n))))
            }
            b'i' => {
                self.pos += 1;
                Ok(CPoly::constant(QScalar::from_gauss(Gauss::i())))
            }
            b'q' => {
                self.pos += 1;
                Ok(CPoly::constant(QScalar::q()))
            }
            b'a'..=b'z' => self.variable(),
            _ => Err(self.err("unexpected character")),
        }
    }

    fn variable(&mut self) -> Result<CPoly, ParseError> {
        let start = self.pos;
        let mut slot = Slot::X;
        if self.s.get(self.pos + 1) == Some(&b'.') {
            let name = (self.s[self.pos] as char).to_string();
            slot = Slot::from_name(&name).ok_or_else(|| self.err("unknown slot prefix"))?;
            self.pos += 2;
        }
        if self.s.get(self.pos) != Some(&b'x') {
            self.pos = start;
            return Err(self.err("unknown identifier"));
        }
        let axis = self
            .s
            .get(self.pos + 1)
            .and_then(|c| Axis::from_symbol(*c as char))
            .ok_or_else(|| ParseError { pos: self.pos + 1, msg: "axis '+', '3' or '-' expected".into() })?;
        self.pos += 2;
        Ok(CPoly::var(slot, axis))
    }
}

fn as_scalar(p: &CPoly) -> Option<QScalar> {
    if p.degree() == 0 {
        Some(p.coeff(&Exps::one()))
    } else {
        None
    }
}
