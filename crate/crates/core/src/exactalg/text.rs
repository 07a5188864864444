//! Canonical text form of [`LaurentPoly`].
//!
//! Output is a ` + `-joined list of terms `(coeff)*t^a*x^b*y^c` in canonical
//! monomial order, zero exponents omitted, `0` for the zero polynomial.
//! The parser accepts that form and any sum of products of rationals, `i`,
//! powers of `t`, `x`, `y` and parenthesised subexpressions, so hand-written
//! input like `3/2 + i*t^-2` works too.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::{LaurentPoly, Monomial};
use super::scalar::GaussianRational;
use crate::error::ParseError;

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (name, e) in [('t', m.et), ('x', m.ex), ('y', m.ey)] {
                if e != 0 {
                    write!(f, "*{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

pub fn serialize(p: &LaurentPoly) -> String {
    p.to_string()
}

pub fn parse(text: &str) -> Result<LaurentPoly, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(ParseError::new(
            parser.pos,
            format!("unexpected character '{}'", parser.src[parser.pos] as char),
        ));
    }
    Ok(p)
}

impl std::str::FromStr for LaurentPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.signed_term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += &self.signed_term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= &self.signed_term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed_term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut negate = false;
        while let Some(c @ (b'-' | b'+')) = self.peek() {
            negate ^= c == b'-';
            self.pos += 1;
        }
        let t = self.term()?;
        Ok(if negate { -t } else { t })
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(b'/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let pos = self.pos;
                    let d = self.factor()?;
                    if !d.is_constant() {
                        return Err(ParseError::new(pos, "divisor must be a constant"));
                    }
                    let inv = d
                        .coeff(&Monomial::ONE)
                        .inv()
                        .ok_or_else(|| ParseError::new(pos, "zero denominator"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly, ParseError> {
        let start = self.pos;
        match self.peek() {
            None => Err(ParseError::new(self.pos, "unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(ParseError::new(self.pos, "expected ')'"));
                }
                self.pos += 1;
                if self.peek() != Some(b'^') {
                    return Ok(inner);
                }
                self.pos += 1;
                let pos = self.pos;
                let e = self.exponent()?;
                if e < 0 {
                    return Err(ParseError::new(
                        pos,
                        "negative power of a parenthesised group",
                    ));
                }
                Ok(inner.pow(e as u32))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                Ok(LaurentPoly::constant(GaussianRational::real(
                    BigRational::from_integer(num),
                )))
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(LaurentPoly::constant(GaussianRational::i()))
            }
            Some(v @ (b't' | b'x' | b'y')) => {
                self.pos += 1;
                let e = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.exponent()?
                } else {
                    1
                };
                let m = match v {
                    b't' => Monomial::new(0, 0, e),
                    b'x' => Monomial::new(e, 0, 0),
                    _ => Monomial::new(0, e, 0),
                };
                Ok(LaurentPoly::term(GaussianRational::from_int(1), m))
            }
            Some(c) => Err(ParseError::new(
                start.max(self.pos),
                format!("unexpected character '{}'", c as char),
            )),
        }
    }

    fn digits(&mut self) -> Result<&str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(start, "expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let pos = self.pos;
        let d = self.digits()?;
        d.parse::<BigInt>()
            .map_err(|e| ParseError::new(pos, e.to_string()))
    }

    fn exponent(&mut self) -> Result<i32, ParseError> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let pos = self.pos;
        let d = self.digits()?;
        let e: i32 = d
            .parse()
            .map_err(|_| ParseError::new(pos, "exponent out of range"))?;
        Ok(if negative { -e } else { e })
    }
}
