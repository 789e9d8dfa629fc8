//! Recursive-descent parser for bracket expressions.
//!
//! ```text
//! expr  := term ( '*' term )*        '*' associates to the left
//! term  := IDENT | '[' expr ',' expr ']' | '(' expr ')'
//! IDENT := [A-Za-z][A-Za-z0-9_]* '!'?
//! ```

use crate::error::{Error, Result};

use super::tree::{Generator, ProductTree};

pub fn parse(text: &str) -> Result<ProductTree> {
    let mut p = Parser { text, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let tree = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(tree)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<ProductTree> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('*') {
                return Ok(acc);
            }
            self.bump();
            let rhs = self.term()?;
            acc = ProductTree::node(acc, rhs);
        }
    }

    fn term(&mut self) -> Result<ProductTree> {
        self.skip_ws();
        match self.peek() {
            Some('[') => {
                self.bump();
                let left = self.expr()?;
                self.expect(',')?;
                let right = self.expr()?;
                self.expect(']')?;
                Ok(ProductTree::node(left, right))
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => Ok(ProductTree::Leaf(self.ident())),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn ident(&mut self) -> Generator {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.bump();
        }
        let name = self.text[start..self.pos].to_string();
        let in_b = self.peek() == Some('!');
        if in_b {
            self.bump();
        }
        Generator { name, in_b }
    }
}
