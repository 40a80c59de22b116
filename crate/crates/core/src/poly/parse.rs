//! Recursive-descent parser for the expression grammar shared by the
//! library and the CLI:
//!
//! ```text
//! expr     := ('-')? term (('+' | '-') ('-')? term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' int)?
//! base     := rational | ident | '(' expr ')'
//! rational := uint ('/' posint)?
//! int      := ('-')? uint
//! ident    := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! `*` is mandatory (no juxtaposition), whitespace is insignificant, and
//! every error carries the byte offset where parsing stopped.

use super::{MPoly, PolyError, Ring};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    UnknownVariable(String),
    ZeroDenominator,
    ExponentOverflow,
    Invalid(PolyError),
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
#[error("parse error at byte {pos}: {}", self.describe())]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn describe(&self) -> String {
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => format!("unexpected character {c:?}"),
            ParseErrorKind::UnexpectedEnd => "unexpected end of input".into(),
            ParseErrorKind::UnknownVariable(v) => format!("unknown variable {v:?}"),
            ParseErrorKind::ZeroDenominator => "denominator must be a positive integer".into(),
            ParseErrorKind::ExponentOverflow => "exponent is out of range".into(),
            ParseErrorKind::Invalid(e) => e.to_string(),
        }
    }
}

struct Parser<'a, S> {
    ring: &'a Ring,
    input: &'a str,
    pos: usize,
    _marker: std::marker::PhantomData<S>,
}

pub fn parse<S: Scalar>(ring: &Ring, input: &str) -> Result<MPoly<S>, ParseError> {
    let mut p = Parser {
        ring,
        input,
        pos: 0,
        _marker: std::marker::PhantomData,
    };
    p.skip_ws();
    let value = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(value),
        Some(c) => Err(p.fail(ParseErrorKind::UnexpectedChar(c))),
    }
}

impl<'a, S: Scalar> Parser<'a, S> {
    fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn fail(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            pos: self.pos,
            kind,
        }
    }

    fn fail_at(&self, pos: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { pos, kind }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly<S>, ParseError> {
        let mut acc = self.signed_term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    self.skip_ws();
                    let t = self.signed_term()?;
                    acc = &acc + &t;
                }
                Some('-') => {
                    self.bump();
                    self.skip_ws();
                    let t = self.signed_term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed_term(&mut self) -> Result<MPoly<S>, ParseError> {
        if self.eat('-') {
            self.skip_ws();
            let t = self.term()?;
            Ok(-&t)
        } else {
            self.term()
        }
    }

    fn term(&mut self) -> Result<MPoly<S>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat('*') {
                self.skip_ws();
                let f = self.factor()?;
                acc = &acc * &f;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly<S>, ParseError> {
        let base = self.base()?;
        self.skip_ws();
        if self.eat('^') {
            self.skip_ws();
            let exp_pos = self.pos;
            let exp = self.signed_int()?;
            base.pow(exp)
                .map_err(|e| self.fail_at(exp_pos, ParseErrorKind::Invalid(e)))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<MPoly<S>, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) if c.is_ascii_alphabetic() => self.ident(),
            Some('(') => {
                self.bump();
                self.skip_ws();
                let inner = self.expr()?;
                self.skip_ws();
                if self.eat(')') {
                    Ok(inner)
                } else {
                    match self.peek() {
                        Some(c) => Err(self.fail(ParseErrorKind::UnexpectedChar(c))),
                        None => Err(self.fail(ParseErrorKind::UnexpectedEnd)),
                    }
                }
            }
            Some(c) => Err(self.fail(ParseErrorKind::UnexpectedChar(c))),
            None => Err(self.fail(ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return match self.peek() {
                Some(c) => Err(self.fail(ParseErrorKind::UnexpectedChar(c))),
                None => Err(self.fail(ParseErrorKind::UnexpectedEnd)),
            };
        }
        Ok(&self.input[start..self.pos])
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let negative = self.eat('-');
        let digits = self.digits()?;
        let value: i64 = digits
            .parse()
            .map_err(|_| self.fail_at(start, ParseErrorKind::ExponentOverflow))?;
        Ok(if negative { -value } else { value })
    }

    fn rational(&mut self) -> Result<MPoly<S>, ParseError> {
        let numer = S::from_decimal_digits(self.digits()?);
        let save = self.pos;
        self.skip_ws();
        if self.eat('/') {
            self.skip_ws();
            let den_pos = self.pos;
            let denom = S::from_decimal_digits(self.digits()?);
            if denom.is_zero() {
                return Err(self.fail_at(den_pos, ParseErrorKind::ZeroDenominator));
            }
            Ok(MPoly::constant(self.ring, numer / denom))
        } else {
            self.pos = save;
            Ok(MPoly::constant(self.ring, numer))
        }
    }

    fn ident(&mut self) -> Result<MPoly<S>, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.bump();
        }
        let name = &self.input[start..self.pos];
        match self.ring.var_index(name) {
            Some(i) => Ok(MPoly::var(self.ring, i)),
            None => Err(self.fail_at(start, ParseErrorKind::UnknownVariable(name.to_string()))),
        }
    }
}
