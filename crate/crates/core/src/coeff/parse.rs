//! Parser for coefficient expressions such as `q^4*Q1 - q^-1*Q_2` or `3/2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::poly::{MultiPoly, MAX_Q};
use super::ratfunc::RatFunc;
use super::scalar::Scalar;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = if self.eat(b'-') { -self.term()? } else { self.term()? };
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.power()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.power()?;
                match d.try_inv() {
                    Some(inv) => acc = acc * inv,
                    None => return err(at, "division by zero"),
                }
            } else if matches!(self.peek(), Some(b'q' | b'Q' | b'(')) {
                // implicit multiplication, e.g. `2q` or `q(1+q)`
                acc = acc * self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let neg = self.eat(b'-');
        let e = self.integer()?;
        let e: u32 = u32::try_from(&e).map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
        let mut out = RatFunc::one();
        for _ in 0..e {
            out = out * &base;
        }
        if neg {
            match out.try_inv() {
                Some(inv) => Ok(inv),
                None => err(at, "negative power of zero"),
            }
        } else {
            Ok(out)
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, "expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return err(self.pos, "expected ')'");
                }
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFunc::from_poly(MultiPoly::q()))
            }
            Some(b'Q') => {
                self.pos += 1;
                if self.src.get(self.pos) == Some(&b'_') {
                    self.pos += 1;
                }
                let at = self.pos;
                let i = self.integer()?;
                match usize::try_from(&i) {
                    Ok(i) if (1..=MAX_Q).contains(&i) => Ok(RatFunc::from_poly(MultiPoly::big_q(i))),
                    _ => err(at, format!("Q index must lie in 1..={MAX_Q}")),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(RatFunc::from_poly(MultiPoly::constant(BigRational::from_integer(v))))
            }
            Some(c) => err(self.pos, format!("unexpected character '{}'", c as char)),
            None => err(self.pos, "unexpected end of input"),
        }
    }
}

/// Parses a rational function in `q, Q1..Q7`.
pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != s.len() {
        return err(p.pos, "trailing input");
    }
    Ok(v)
}

/// Parses a Laurent polynomial in `q, Q1..Q7`.
pub fn parse_poly(s: &str) -> Result<MultiPoly> {
    let v = parse_ratfunc(s)?;
    v.as_poly().ok_or_else(|| Error::Parse { pos: 0, msg: format!("'{s}' is not a Laurent polynomial") })
}

/// Parses a rational constant such as `-3/2`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let p = parse_poly(s)?;
    p.constant_value().ok_or_else(|| Error::Parse { pos: 0, msg: format!("'{s}' is not a rational number") })
}

/// Splits a comma-separated list, tracking the byte offset of each item for errors.
pub fn split_list(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

/// Parses a comma-separated list of polynomial expressions, shifting error positions.
pub fn parse_poly_list(s: &str) -> Result<Vec<MultiPoly>> {
    split_list(s)
        .into_iter()
        .map(|(off, item)| {
            parse_poly(item).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: pos + off, msg },
                other => other,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_expressions() {
        assert_eq!(parse_poly("q^4*Q1 - q^-1*Q_2").unwrap().to_string(), "q^4*Q1 - q^-1*Q2");
        assert_eq!(parse_poly("(1+q)(1+q+q^2)").unwrap().to_string(), "q^3 + 2*q^2 + 2*q + 1");
        assert_eq!(parse_rational("-3/6").unwrap(), BigRational::new((-1).into(), 2.into()));
        let r = parse_ratfunc("1/(1+q)").unwrap();
        assert_eq!(r.to_string(), "(1)/(q + 1)");
        assert!(matches!(parse_poly("q + $"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly_list("1, q^5*Q9"), Err(Error::Parse { pos: 8, .. })));
        assert_eq!(parse_poly_list("1,q^5").unwrap().len(), 2);
    }
}
