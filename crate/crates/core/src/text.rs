//! Textual forms of polynomials.
//!
//! Expanded: `x^8 - 2x^7 - 3x^6 + 10`, terms in descending degree, unit
//! coefficients omitted. Factored: a juxtaposed product such as
//! `x^3(x + 1)^2(x - 1)(x^2 - x - 8)`, where bare `x` factors are printed
//! without parentheses. [`parse_poly`] accepts either form (and any mix of
//! sums, products, and powers); [`parse_factored`] keeps the factor
//! structure of a product.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{FactoredPoly, IntPolynomial};

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mag = c.abs();
            if d == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (factor, m) in &self.factors {
            if *factor == IntPolynomial::x() {
                write!(f, "x")?;
            } else {
                write!(f, "({factor})")?;
            }
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<IntPolynomial> {
        parse_poly(s)
    }
}

impl FromStr for FactoredPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<FactoredPoly> {
        parse_factored(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Parser<'a> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as an integer"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let at = self.pos;
        let e = self.integer()?;
        u32::try_from(e).or_else(|_| {
            self.pos = at;
            self.err("exponent too large")
        })
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(b'0'..=b'9' | b'x' | b'('))
    }

    fn atom(&mut self) -> Result<IntPolynomial> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(IntPolynomial::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(b'0'..=b'9') => Ok(IntPolynomial::constant(self.integer()?)),
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn power(&mut self) -> Result<IntPolynomial> {
        let base = self.atom()?;
        let e = self.exponent()?;
        Ok(base.pow(e))
    }

    fn term(&mut self) -> Result<IntPolynomial> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') || self.starts_atom() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn expr(&mut self) -> Result<IntPolynomial> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(())
    }
}

pub fn parse_poly(s: &str) -> Result<IntPolynomial> {
    let mut p = Parser::new(s);
    let out = p.expr()?;
    p.finish()?;
    Ok(out)
}

/// Parses a product of factors, each `x`, an integer, or a parenthesized
/// polynomial, optionally raised to a power.
pub fn parse_factored(s: &str) -> Result<FactoredPoly> {
    let mut p = Parser::new(s);
    let mut factors = Vec::new();
    loop {
        p.eat(b'*');
        if p.peek().is_none() {
            break;
        }
        let f = p.atom()?;
        let m = p.exponent()?;
        factors.push((f, m));
    }
    if factors.is_empty() {
        return p.err("empty product");
    }
    Ok(FactoredPoly::new(factors))
}
