//! Recursive-descent parser for rational expressions in `v`.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := unary (('*'|'/') unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' '-'? int)?`,
//! `atom := rational | 'v' | '(' expr ')'`. Whitespace is ignored.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ratfunc::RatFunc;
use crate::error::Error;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc, Error> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, Error> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.unary()?;
            } else if self.eat(b'/') {
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(self.err("division by zero"));
                }
                acc = acc / d;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, Error> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc, Error> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let k = self.integer()?;
        let k: i64 = k.try_into().map_err(|_| self.err("exponent too large"))?;
        let k = if neg { -k } else { k };
        pow(&base, k).ok_or_else(|| self.err("zero raised to a negative power"))
    }

    fn integer(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(txt.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<RatFunc, Error> {
        match self.peek() {
            Some(b'v') => {
                self.pos += 1;
                Ok(RatFunc::v())
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.integer()?;
                Ok(RatFunc::from_rational(BigRational::from_integer(k)))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

fn pow(x: &RatFunc, k: i64) -> Option<RatFunc> {
    let base = if k < 0 { x.inv()? } else { x.clone() };
    let mut acc = RatFunc::one();
    for _ in 0..k.unsigned_abs() {
        acc = acc * &base;
    }
    Some(acc)
}

pub(crate) fn parse_ratfunc(s: &str) -> Result<RatFunc, Error> {
    let cleaned: Vec<u8> = s.bytes().filter(|c| !c.is_ascii_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { s: &cleaned, pos: 0 };
    let e = p.expr()?;
    if p.pos != cleaned.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_common_forms() {
        let v = RatFunc::v();
        assert_eq!(parse_ratfunc("v").unwrap(), v);
        assert_eq!(parse_ratfunc("3*v^-2").unwrap(), RatFunc::from_int(3) / (v.clone() * &v));
        assert_eq!(parse_ratfunc(" 2 * v ").unwrap(), RatFunc::from_int(2) * &v);
        assert_eq!(parse_ratfunc("-v^2").unwrap(), -(v.clone() * &v));
        assert_eq!(parse_ratfunc("(v+1)^2").unwrap(), parse_ratfunc("v^2+2*v+1").unwrap());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "a", "v^", "(v", "1/0", "v)", "2**v"] {
            assert!(parse_ratfunc(s).is_err(), "{s}");
        }
    }
}
