//! Parser for algebra expressions such as `y*x`, `x*y - 1/2*x^2` or `(x+y)^2`.

use super::{Algebra, AlgebraElement, Word};
use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::scalar::{int, Scalar};

struct Parser<'a> {
    alg: &'a Algebra,
    src: Vec<char>,
    pos: usize,
}

pub fn parse_expression(alg: &Algebra, text: &str) -> Result<AlgebraElement> {
    let mut p = Parser {
        alg,
        src: text.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    if p.src.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let e = p.expr()?;
    if p.pos != p.src.len() {
        return Err(Error::Parse(format!(
            "unexpected `{}` at position {}",
            p.src[p.pos], p.pos
        )));
    }
    Ok(e)
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<AlgebraElement> {
        let mut acc = LinComb::zero();
        let mut sign = int(1);
        if let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            if c == '-' {
                sign = int(-1);
            }
        }
        loop {
            let t = self.term()?;
            acc.add_scaled(&t, &sign);
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = int(1);
                }
                Some('-') => {
                    self.pos += 1;
                    sign = int(-1);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(c) if c == '(' || c.is_ascii_digit() || c.is_alphabetic() || c == '_')
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.power()?;
        loop {
            if self.peek() == Some('*') {
                self.pos += 1;
            } else if !self.starts_atom() {
                return Ok(acc);
            }
            let f = self.power()?;
            acc = self.alg.multiply(&acc, &f)?;
        }
    }

    fn power(&mut self) -> Result<AlgebraElement> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let n = self.integer()?;
        let mut acc = self.alg.unit();
        for _ in 0..n {
            acc = self.alg.multiply(&acc, &base)?;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected an integer at position {start}")));
        }
        let s: String = self.src[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| Error::Parse(format!("integer `{s}` out of range")))
    }

    fn atom(&mut self) -> Result<AlgebraElement> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let mut q = Scalar::from_integer(n.into());
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d == 0 {
                        return Err(Error::Parse("division by zero".into()));
                    }
                    q /= Scalar::from_integer(d.into());
                }
                Ok(LinComb::single(Word::unit(), q))
            }
            Some(_) => {
                let rest: String = self.src[self.pos..].iter().collect();
                let g = self
                    .alg
                    .presentation()
                    .generators()
                    .iter()
                    .filter(|g| rest.starts_with(g.name.as_str()))
                    .max_by_key(|g| g.name.len())
                    .ok_or_else(|| Error::UnknownGenerator(rest.clone()))?;
                self.pos += g.name.chars().count();
                Ok(self.alg.generator(g.id))
            }
            None => Err(Error::Parse("unexpected end of expression".into())),
        }
    }
}
