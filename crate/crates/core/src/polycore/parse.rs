//! Canonical text form. Terms are printed in the monomial order joined by
//! ` + ` / ` - `, coefficients as `a` or `a/b`, monomials as `x^2*y`.
//! Rational functions print as `(num)/(den)` unless the denominator is 1.
//! The parser accepts any expression built from numbers, variables, `+`,
//! `-` (or `−`), `*`, `/`, `^` and parentheses.

use std::fmt;

use num::{BigInt, One, Signed};

use super::{Coeff, Monomial, PolyError, Polynomial, RationalFunction, Ring};

fn write_monomial(f: &mut fmt::Formatter<'_>, names: &[String], m: &Monomial) -> fmt::Result {
    for (k, (v, e)) in m.iter().enumerate() {
        if k > 0 {
            f.write_str("*")?;
        }
        f.write_str(&names[v.index()])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Coeff) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        self.ring().with_names(|names| {
            for (k, (m, c)) in self.terms().iter().enumerate() {
                let neg = c.is_negative();
                match (k, neg) {
                    (0, true) => f.write_str("-")?,
                    (0, false) => {}
                    (_, true) => f.write_str(" - ")?,
                    (_, false) => f.write_str(" + ")?,
                }
                let a = c.abs();
                if m.is_one() {
                    write_coeff(f, &a)?;
                } else {
                    if !a.is_one() {
                        write_coeff(f, &a)?;
                        f.write_str("*")?;
                    }
                    write_monomial(f, names, m)?;
                }
            }
            Ok(())
        })
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({})/({})", self.num(), self.den())
        }
    }
}

/// Parses a polynomial, declaring unseen variables in `ring`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, PolyError> {
    let f = parse_rational(ring, text)?;
    if !f.is_polynomial() {
        return Err(PolyError::Parse {
            pos: 0,
            msg: format!("`{text}` is not a polynomial"),
        });
    }
    Ok(f.into_parts().0)
}

/// Parses a rational expression, declaring unseen variables in `ring`.
pub fn parse_rational(ring: &Ring, text: &str) -> Result<RationalFunction, PolyError> {
    let mut p = Parser {
        ring,
        chars: text.char_indices().collect(),
        pos: 0,
        len: text.len(),
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    ring: &'a Ring,
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn byte_pos(&self) -> usize {
        self.chars.get(self.pos).map(|c| c.0).unwrap_or(self.len)
    }

    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.byte_pos(),
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek_op(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    fn expr(&mut self) -> Result<RationalFunction, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek_op() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.try_add(&self.term()?)?;
                }
                Some('-') | Some('−') => {
                    self.pos += 1;
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek_op() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.try_mul(&self.unary()?)?;
                }
                Some('/') => {
                    self.pos += 1;
                    let at = self.byte_pos();
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(PolyError::Parse {
                            pos: at,
                            msg: "division by zero".into(),
                        });
                    }
                    acc = acc.try_div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, PolyError> {
        match self.peek_op() {
            Some('-') | Some('−') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction, PolyError> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
            return base.try_pow(e);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(s.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<RationalFunction, PolyError> {
        match self.peek_op() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction::constant(self.ring, Coeff::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.byte_pos();
                let name = self.identifier()?;
                let v = self.ring.var(&name).map_err(|e| match e {
                    PolyError::InvalidVariableName(n) => PolyError::Parse {
                        pos: at,
                        msg: format!("invalid variable name `{n}`"),
                    },
                    other => other,
                })?;
                Ok(RationalFunction::var(self.ring, v))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn identifier(&mut self) -> Result<String, PolyError> {
        let mut name = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                name.push(c);
                self.pos += 1;
            } else if c == '{' || c == '[' {
                let close = if c == '{' { '}' } else { ']' };
                name.push(c);
                self.pos += 1;
                loop {
                    match self.peek() {
                        Some(d) if d == close => {
                            name.push(d);
                            self.pos += 1;
                            break;
                        }
                        Some(d) if d.is_ascii_digit() || d == ',' => {
                            name.push(d);
                            self.pos += 1;
                        }
                        _ => return Err(self.error("unterminated index group in variable name")),
                    }
                }
            } else {
                break;
            }
        }
        Ok(name)
    }
}
