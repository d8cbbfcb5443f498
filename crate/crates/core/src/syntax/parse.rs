use super::{Alphabet, Regex, Symbol};
use crate::error::{Error, Result};

/// Parses `text`, rejecting any letter outside `alphabet`.
///
/// The returned term mirrors the text exactly; nothing is simplified.
/// `&`, `-` and `+` associate to the left, juxtaposition to the right.
pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Regex> {
    Parser::new(text, Some(alphabet)).parse()
}

/// Parses `text` accepting every lowercase letter as a symbol.
pub fn parse_inferred(text: &str) -> Result<Regex> {
    Parser::new(text, None).parse()
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    alphabet: Option<&'a Alphabet>,
}

impl<'a> Parser<'a> {
    fn new(text: &str, alphabet: Option<&'a Alphabet>) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            alphabet,
        }
    }

    fn parse(mut self) -> Result<Regex> {
        let e = self.union()?;
        self.skip_ws();
        match self.peek() {
            None => Ok(e),
            Some(')') => Err(self.error("unmatched ')'")),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn union(&mut self) -> Result<Regex> {
        let mut acc = self.difference()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            acc = Regex::union(acc, self.difference()?);
        }
        Ok(acc)
    }

    fn difference(&mut self) -> Result<Regex> {
        let mut acc = self.intersection()?;
        while self.peek() == Some('-') {
            self.pos += 1;
            acc = Regex::diff(acc, self.intersection()?);
        }
        Ok(acc)
    }

    fn intersection(&mut self) -> Result<Regex> {
        let mut acc = self.concatenation()?;
        while self.peek() == Some('&') {
            self.pos += 1;
            acc = Regex::intersect(acc, self.concatenation()?);
        }
        Ok(acc)
    }

    fn concatenation(&mut self) -> Result<Regex> {
        let mut factors = vec![self.postfix()?];
        while matches!(self.peek(), Some(c) if starts_atom(c)) {
            factors.push(self.postfix()?);
        }
        let last = factors.pop().expect("at least one factor");
        Ok(factors
            .into_iter()
            .rev()
            .fold(last, |rest, f| Regex::concat(f, rest)))
    }

    fn postfix(&mut self) -> Result<Regex> {
        let mut e = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            e = Regex::star(e);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Regex> {
        let Some(c) = self.peek() else {
            return Err(self.error("unexpected end of input"));
        };
        let start = self.pos;
        self.pos += 1;
        match c {
            '0' => Ok(Regex::Empty),
            '1' => Ok(Regex::Epsilon),
            '(' => {
                let inner = self.union()?;
                if self.peek() == Some(')') {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    Err(self.error("expected ')'"))
                }
            }
            c if c.is_ascii_lowercase() => {
                let sym = Symbol::new(c)?;
                match self.alphabet {
                    Some(a) if !a.contains(sym) => Err(Error::Alphabet {
                        symbol: c,
                        position: Some(start),
                    }),
                    _ => Ok(Regex::Sym(sym)),
                }
            }
            c => {
                self.pos = start;
                Err(self.error(format!("unexpected '{c}'")))
            }
        }
    }
}

fn starts_atom(c: char) -> bool {
    c == '0' || c == '1' || c == '(' || c.is_ascii_lowercase()
}
