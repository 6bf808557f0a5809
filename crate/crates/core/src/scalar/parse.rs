//! Recursive-descent parser for the scalar grammar: integers, rationals
//! `p/q`, parameters as identifiers, `+ - * / ( ) ^` with integer exponents.

use super::{Q, Scalar};
use crate::error::Error;
use num_bigint::BigInt;

#[derive(Clone)]
pub struct Cursor<'a> {
    src: &'a [u8],
    pub pos: usize,
    pub line: usize,
    pub col: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    pub fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    pub fn peek_at(&self, off: usize) -> Option<u8> {
        self.src.get(self.pos + off).copied()
    }

    pub fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    pub fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.bump();
        }
    }

    pub fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub fn integer(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("expected integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<BigInt>()
            .map_err(|e| self.error(format!("bad integer: {e}")))
    }

    pub fn ident(&mut self) -> Result<String, Error> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b'a'..=b'z') | Some(b'A'..=b'Z') | Some(b'_'))
            || (self.pos > start && matches!(self.peek(), Some(b'0'..=b'9')))
        {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("expected identifier"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string())
    }
}

pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let mut cur = Cursor::new(text);
    let s = scalar_sum(&mut cur)?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(cur.error("trailing input after scalar"));
    }
    Ok(s)
}

pub fn scalar_sum(cur: &mut Cursor) -> Result<Scalar, Error> {
    let mut acc = scalar_product(cur)?;
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(b'+') => {
                cur.bump();
                let rhs = scalar_product(cur)?;
                acc = &acc + &rhs;
            }
            Some(b'-') => {
                cur.bump();
                let rhs = scalar_product(cur)?;
                acc = &acc - &rhs;
            }
            _ => return Ok(acc),
        }
    }
}

fn scalar_product(cur: &mut Cursor) -> Result<Scalar, Error> {
    let mut acc = scalar_power(cur)?;
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(b'*') => {
                cur.bump();
                let rhs = scalar_power(cur)?;
                acc = &acc * &rhs;
            }
            Some(b'/') => {
                cur.bump();
                let rhs = scalar_power(cur)?;
                acc = acc.checked_div(&rhs).map_err(|_| cur.error("division by zero"))?;
            }
            _ => return Ok(acc),
        }
    }
}

fn scalar_power(cur: &mut Cursor) -> Result<Scalar, Error> {
    let base = scalar_atom(cur)?;
    cur.skip_ws();
    if cur.peek() == Some(b'^') {
        cur.bump();
        cur.skip_ws();
        let neg = cur.eat(b'-');
        let e = cur.integer()?;
        let e: i64 = e
            .try_into()
            .map_err(|_| cur.error("exponent out of range"))?;
        let e = if neg { -e } else { e };
        return base.pow(e).map_err(|_| cur.error("inverse of zero"));
    }
    Ok(base)
}

fn scalar_atom(cur: &mut Cursor) -> Result<Scalar, Error> {
    cur.skip_ws();
    match cur.peek() {
        Some(b'-') => {
            cur.bump();
            let s = scalar_power(cur)?;
            Ok(-&s)
        }
        Some(b'(') => {
            cur.bump();
            let s = scalar_sum(cur)?;
            cur.expect(b')')?;
            Ok(s)
        }
        Some(b'0'..=b'9') => {
            let n = cur.integer()?;
            Ok(Scalar::from_q(Q::from_integer(n)))
        }
        Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
            let name = cur.ident()?;
            Ok(Scalar::var(&name))
        }
        _ => Err(cur.error("expected scalar atom")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_print_round_trip() {
        for text in [
            "(3*k+8)/(4)",
            "k^2-2*k+1",
            "-5/3",
            "(k+2)/(k^2+7*k+12)",
            "(c*h+q)/(c^2)",
        ] {
            let s = parse_scalar(text).unwrap();
            let printed = s.to_string();
            let reparsed = parse_scalar(&printed).unwrap();
            assert_eq!(s, reparsed, "round trip through {printed}");
            assert_eq!(printed, reparsed.to_string());
        }
    }

    #[test]
    fn rational_literal() {
        let s = parse_scalar("3/4").unwrap();
        assert_eq!(s, Scalar::ratio(3, 4));
    }

    #[test]
    fn power_and_unary_minus() {
        let s = parse_scalar("-(k+1)^2").unwrap();
        let k1 = &Scalar::var("k") + &Scalar::from_int(1);
        assert_eq!(s, -&(&k1 * &k1));
    }

    #[test]
    fn parse_error_has_position() {
        let err = parse_scalar("k + $").unwrap_err();
        match err {
            crate::error::Error::Parse { line, col, .. } => {
                assert_eq!(line, 1);
                assert!(col >= 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
