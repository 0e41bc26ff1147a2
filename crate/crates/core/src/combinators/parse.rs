use thiserror::Error;

use super::{Comb, Term};

/// A parse failure at a character offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at {position}: {message}")]
pub struct SyntaxError {
    pub position: usize,
    pub message: String,
}

/// Parses `term = factor+`, `factor = constant | atom | "(" term ")"`.
/// Application associates to the left and constants are single letters,
/// so `WW` is `W W`.
pub fn parse(text: &str) -> Result<Term, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut p = Parser { chars, pos: 0 };
    let t = p.term()?;
    p.skip_space();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(t)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_space(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        let mut t = self
            .factor()?
            .ok_or_else(|| self.error("expected a term"))?;
        while let Some(a) = self.factor()? {
            t = Term::app(t, a);
        }
        Ok(t)
    }

    fn factor(&mut self) -> Result<Option<Term>, SyntaxError> {
        self.skip_space();
        let Some(&c) = self.chars.get(self.pos) else {
            return Ok(None);
        };
        if c == '(' {
            self.pos += 1;
            let t = self.term()?;
            self.skip_space();
            if self.chars.get(self.pos) != Some(&')') {
                return Err(self.error("expected ')'"));
            }
            self.pos += 1;
            return Ok(Some(t));
        }
        if c == ')' {
            return Ok(None);
        }
        if let Some(k) = Comb::from_char(c) {
            self.pos += 1;
            return Ok(Some(Term::Const(k)));
        }
        if c.is_ascii_lowercase() {
            let start = self.pos;
            while self
                .chars
                .get(self.pos)
                .is_some_and(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || *c == '_')
            {
                self.pos += 1;
            }
            let name: String = self.chars[start..self.pos].iter().collect();
            return Ok(Some(Term::atom(&name)));
        }
        Err(self.error(format!("unexpected '{c}'")))
    }
}
