use num_traits::One;

use super::polynomial::{Monomial, SparsePolynomial};
use super::variable::VariableId;
use crate::error::{Error, Result};
use crate::root_core::rational::{parse_rational, Rational};

/// Largest total degree accepted for one parsed monomial.
pub const MAX_DEGREE: u32 = 1000;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits")
    }

    fn number(&mut self) -> Result<Rational> {
        let start = self.pos;
        self.digits();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            if self.digits().is_empty() {
                return Err(self.err("expected denominator"));
            }
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        parse_rational(text)
    }

    fn variable(&mut self) -> Result<VariableId> {
        let start = self.pos;
        let kind = self.peek().ok_or_else(|| self.err("expected variable"))?;
        self.pos += 1;
        if kind != b'l' {
            if self.peek() == Some(b'{') {
                while self.peek().is_some_and(|b| b != b'}') {
                    self.pos += 1;
                }
                if self.peek() != Some(b'}') {
                    return Err(self.err("unterminated index list"));
                }
                self.pos += 1;
            } else {
                self.digits();
            }
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).map_err(|_| self.err("invalid utf-8"))?;
        text.parse()
    }

    fn factor(&mut self, m: &mut Vec<(VariableId, u32)>, c: &mut Rational) -> Result<()> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                *c *= self.number()?;
                Ok(())
            }
            Some(b'x' | b'u' | b't' | b'l') => {
                let v = self.variable()?;
                let mut e = 1u32;
                self.skip_ws();
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.digits();
                    e = d.parse().ok().filter(|&e| e <= MAX_DEGREE).ok_or_else(|| self.err("bad exponent"))?;
                }
                m.push((v, e));
                Ok(())
            }
            _ => Err(self.err("expected factor")),
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut m = Vec::new();
        let mut c = Rational::one();
        self.factor(&mut m, &mut c)?;
        loop {
            self.skip_ws();
            if self.peek() != Some(b'*') {
                break;
            }
            self.pos += 1;
            self.skip_ws();
            self.factor(&mut m, &mut c)?;
        }
        if m.iter().map(|(_, e)| *e as u64).sum::<u64>() > MAX_DEGREE as u64 {
            return Err(self.err("monomial degree too large"));
        }
        Ok((Monomial::from_factors(m), c))
    }
}

/// Parses the canonical string form (`"u12*u23 - u13*t2 - 1/2*l"`).
/// Accepts arbitrary spacing, repeated factors, and unsorted terms.
pub fn parse_polynomial(s: &str) -> Result<SparsePolynomial> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let mut out = SparsePolynomial::zero();
    p.skip_ws();
    let mut first = true;
    loop {
        let mut negative = false;
        match p.peek() {
            Some(b'-') => {
                negative = true;
                p.pos += 1;
            }
            Some(b'+') if !first => p.pos += 1,
            None if first => return Err(p.err("empty input")),
            _ if !first => return Err(p.err("expected '+' or '-'")),
            _ => {}
        }
        p.skip_ws();
        let (m, c) = p.term()?;
        out.add_term(m, if negative { -c } else { c });
        first = false;
        p.skip_ws();
        if p.peek().is_none() {
            return Ok(out);
        }
    }
}

impl std::str::FromStr for SparsePolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}
