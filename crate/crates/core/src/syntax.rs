//! Shared tokenizer state for the small text grammars (ordinals, formulas,
//! points and sequents). All grammars are ASCII and whitespace-insensitive.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

/// A syntax error, positioned at a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl fmt::Display) -> Self {
        ParseError {
            position,
            message: message.to_string(),
        }
    }

    /// Renders the input with a caret under the offending position.
    pub fn render(&self, input: &str) -> String {
        let pos = self.position.min(input.len());
        format!("{}\n{}\n{}^", self, input, " ".repeat(pos))
    }
}

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    pub(crate) fn position(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    pub(crate) fn unexpected(&mut self, wanted: &str) -> ParseError {
        let pos = self.position();
        match self.src[pos..].chars().next() {
            Some(found) => ParseError::new(pos, format!("expected {wanted}, found '{found}'")),
            None => ParseError::new(pos, format!("expected {wanted}, found end of input")),
        }
    }

    pub(crate) fn at_digit(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit())
    }

    pub(crate) fn nat(&mut self) -> Result<BigUint, ParseError> {
        let start = self.position();
        let len = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if len == 0 {
            return Err(self.unexpected("a natural number"));
        }
        self.pos = start + len;
        // digits only, so parsing cannot fail
        Ok(self.src[start..start + len].parse().unwrap())
    }

    pub(crate) fn small_nat(&mut self) -> Result<usize, ParseError> {
        let start = self.position();
        let n = self.nat()?;
        usize::try_from(n).map_err(|_| ParseError::new(start, "number too large"))
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            Err(self.unexpected("end of input"))
        } else {
            Ok(())
        }
    }
}
