//! Textual polynomial syntax.
//!
//! Grammar: integer literals, declared variable names, `+ - * ^` and
//! parentheses. Juxtaposition is not multiplication. `^` binds tightest,
//! then unary minus, then `*`, then `+` and `-`. Whitespace is ignored.

use num_bigint::BigInt;
use socle_core::monomial::MonomialOrder;
use socle_core::poly::Polynomial;
use socle_core::scalar::FieldSpec;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("parse error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: FieldSpec,
    vars: &'a [String],
    nvars: usize,
}

pub fn parse_polynomial(
    src: &str,
    vars: &[String],
    field: FieldSpec,
) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        field,
        vars,
        nvars: vars.len(),
    };
    p.skip_ws();
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Canonical rendering; `parse_polynomial` of the output reproduces the
/// polynomial exactly.
pub fn emit_polynomial(p: &Polynomial, vars: &[String]) -> String {
    p.display_with(vars, MonomialOrder::DegRevLex)
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> ParseError {
        ParseError {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_ws();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                acc = acc.mul(&self.unary()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            self.skip_ws();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let exp = self.natural()?;
            return Ok(base.pow_or_one(exp, self.field, self.nvars));
        }
        Ok(base)
    }

    fn natural(&mut self) -> Result<u32, ParseError> {
        if self.peek() == Some(b'-') {
            return Err(self.err("exponent must be nonnegative"));
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an exponent"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse::<u32>().map_err(|_| ParseError {
            pos: start,
            message: "exponent too large".to_string(),
        })
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected closing parenthesis"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = digits.parse().map_err(|_| ParseError {
                    pos: start,
                    message: "bad integer literal".to_string(),
                })?;
                Ok(Polynomial::constant(self.nvars, self.field.from_bigint(&n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.vars.iter().position(|v| v == name) {
                    Some(i) => Ok(Polynomial::variable(self.nvars, i, self.field.one())),
                    None => Err(ParseError {
                        pos: start,
                        message: format!("unknown identifier `{name}`"),
                    }),
                }
            }
            Some(_) => Err(self.err("expected a literal, variable or parenthesized expression")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

trait PowOrOne {
    fn pow_or_one(&self, k: u32, field: FieldSpec, nvars: usize) -> Polynomial;
}

impl PowOrOne for Polynomial {
    fn pow_or_one(&self, k: u32, field: FieldSpec, nvars: usize) -> Polynomial {
        if k == 0 {
            return Polynomial::constant(nvars, field.one());
        }
        self.pow(k)
    }
}
