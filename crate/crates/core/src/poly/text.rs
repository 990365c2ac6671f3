//! Text syntax: terms in canonical order, `^` for powers, explicit `*`.
//!
//! Grammar accepted by the parser:
//!
//! ```text
//! expr    := ['+' | '-'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary ['^' ['-'] integer]
//! primary := integer ['/' integer] | name | '(' expr ')'
//! ```
//!
//! Negative powers are accepted only for unit monomials.

use std::fmt;
use std::sync::Arc;



use crate::coeff::Field;

use super::{PolyError, Polynomial, VarTable};

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, abs) = c.sign_split();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut first = true;
            if m.is_one() || !abs.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for i in m.support() {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.vars().name(i))?;
                let e = m.exponent(i);
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> Polynomial<F> {
    pub fn parse(vars: &Arc<VarTable>, s: &str) -> Result<Self, PolyError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0, vars };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Arc<VarTable>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&str, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn expr<F: Field>(&mut self) -> Result<Polynomial<F>, PolyError> {
        let mut acc = Polynomial::zero(self.vars);
        let mut neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<F: Field>(&mut self) -> Result<Polynomial<F>, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor<F: Field>(&mut self) -> Result<Polynomial<F>, PolyError> {
        let base = self.primary()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let e: u64 = self.digits()?.parse().map_err(|_| self.err("exponent out of range"))?;
        if neg {
            let inv = base.unit_inverse().ok_or_else(|| self.err("negative power of a non-unit"))?;
            Ok(inv.pow(e))
        } else {
            Ok(base.pow(e))
        }
    }

    fn primary<F: Field>(&mut self) -> Result<Polynomial<F>, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?.to_string();
                let lit = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    format!("{num}/{}", self.digits()?)
                } else {
                    num
                };
                let c = F::parse_literal(&lit)?;
                Ok(Polynomial::constant(self.vars, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Polynomial::var(self.vars, name)
            }
            _ => Err(self.err("expected number, variable or `(`")),
        }
    }
}
