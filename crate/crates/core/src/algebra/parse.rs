//! Parser for rational expressions in `q` and `t`.
//!
//! Accepts integers, the variables `q` and `t`, `+ - * / ^`, parentheses and
//! juxtaposition as multiplication, so `q(1-t)/(1-qt)` and
//! `q*(1-t)/(1-q*t)` both parse. Exponents may be negative integers.

use super::{AlgebraError, RatFunc};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

pub fn parse_ratfunc(src: &str) -> Result<RatFunc, AlgebraError> {
    let mut p = Parser { s: src.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> AlgebraError {
        AlgebraError::Parse(format!("{what} at byte {}", self.pos))
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

    fn expr(&mut self) -> Result<RatFunc, AlgebraError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, AlgebraError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc.div(&self.power()?)?;
                }
                Some(c) if c == b'(' || c == b'q' || c == b't' || c.is_ascii_digit() => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc, AlgebraError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: u32 = e.parse().map_err(|_| self.err("bad exponent"))?;
            let v = base.pow(e);
            return if neg { v.inv() } else { Ok(v) };
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<String, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<RatFunc, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some(b't') => {
                self.pos += 1;
                Ok(RatFunc::t())
            }
            Some(c) if c.is_ascii_digit() => {
                let s = self.integer()?;
                let v: num_bigint::BigInt = s.parse().map_err(|_| self.err("bad integer"))?;
                Ok(RatFunc::from_bigint(v))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}
