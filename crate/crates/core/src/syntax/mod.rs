//! Regular-expression terms over a finite alphabet of lowercase ASCII
//! letters, with a text syntax and a canonical form.
//!
//! The text syntax uses `0` for the empty language, `1` for the empty word,
//! postfix `*`, juxtaposition for concatenation and the infix operators
//! `&` (intersection), `-` (difference) and `+` (union), in decreasing order
//! of precedence.

mod canonical;
mod parse;
mod render;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use canonical::{
    canonicalize, is_canonical, mk_concat, mk_diff, mk_intersect, mk_star, mk_union,
};
pub use parse::{parse, parse_inferred};
pub use render::render;

/// A single alphabet letter. Always a lowercase ASCII letter, so it never
/// collides with `0`, `1` or an operator in the text syntax.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(char);

impl Symbol {
    pub fn new(ch: char) -> Result<Self> {
        if ch.is_ascii_lowercase() {
            Ok(Symbol(ch))
        } else {
            Err(Error::Alphabet {
                symbol: ch,
                position: None,
            })
        }
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered set of symbols. Iteration order is alphabetical, which fixes
/// the order of DFA transitions and of tie-breaking in equivalence search.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Alphabet(BTreeSet<Symbol>);

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = Symbol>) -> Self {
        Alphabet(symbols.into_iter().collect())
    }

    /// Builds an alphabet from a string of letters such as `"abc"`.
    pub fn from_letters(letters: &str) -> Result<Self> {
        letters
            .chars()
            .enumerate()
            .map(|(i, c)| {
                Symbol::new(c).map_err(|_| Error::Alphabet {
                    symbol: c,
                    position: Some(i),
                })
            })
            .collect::<Result<BTreeSet<_>>>()
            .map(Alphabet)
    }

    /// The letters occurring in any of the given expressions.
    pub fn of_exprs<'a>(exprs: impl IntoIterator<Item = &'a Regex>) -> Self {
        let mut set = BTreeSet::new();
        for e in exprs {
            e.collect_symbols(&mut set);
        }
        Alphabet(set)
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.0.contains(&sym)
    }

    pub fn check(&self, sym: Symbol) -> Result<()> {
        if self.contains(sym) {
            Ok(())
        } else {
            Err(Error::Alphabet {
                symbol: sym.as_char(),
                position: None,
            })
        }
    }

    /// Fails on the first symbol of `word` outside this alphabet.
    pub fn check_word(&self, word: &Word) -> Result<()> {
        for (i, &s) in word.iter().enumerate() {
            if !self.contains(s) {
                return Err(Error::Alphabet {
                    symbol: s.as_char(),
                    position: Some(i),
                });
            }
        }
        Ok(())
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet(self.0.union(&other.0).copied().collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A finite word. The empty word is ε.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word `sym · self`.
    pub fn prepend(&self, sym: Symbol) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(sym);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// All words over `alphabet` of length at most `max_len`, shortest first
    /// and alphabetical within a length.
    pub fn all_upto(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let next: Vec<Word> = layer
                .iter()
                .flat_map(|w| alphabet.iter().map(move |s| w.concat(&Word(vec![s]))))
                .collect();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                Symbol::new(c).map_err(|_| Error::Alphabet {
                    symbol: c,
                    position: Some(i),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A regular-expression term.
///
/// Variant declaration order is the tag order used by the derived `Ord`:
/// `Empty < Epsilon < Sym < Star < Concat < Intersect < Diff < Union`, with
/// fields compared lexicographically after the tag. Canonical unions and
/// intersections are sorted by this order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regex {
    /// ∅
    Empty,
    /// ε
    Epsilon,
    Sym(Symbol),
    Star(Arc<Regex>),
    Concat(Arc<Regex>, Arc<Regex>),
    Intersect(Arc<Regex>, Arc<Regex>),
    Diff(Arc<Regex>, Arc<Regex>),
    Union(Arc<Regex>, Arc<Regex>),
}

// Raw constructors. These build exactly the given structure; see the
// `mk_*` smart constructors for canonical terms.
impl Regex {
    pub fn sym(s: Symbol) -> Regex {
        Regex::Sym(s)
    }

    pub fn star(inner: Regex) -> Regex {
        Regex::Star(Arc::new(inner))
    }

    pub fn concat(left: Regex, right: Regex) -> Regex {
        Regex::Concat(Arc::new(left), Arc::new(right))
    }

    pub fn union(left: Regex, right: Regex) -> Regex {
        Regex::Union(Arc::new(left), Arc::new(right))
    }

    pub fn intersect(left: Regex, right: Regex) -> Regex {
        Regex::Intersect(Arc::new(left), Arc::new(right))
    }

    pub fn diff(left: Regex, right: Regex) -> Regex {
        Regex::Diff(Arc::new(left), Arc::new(right))
    }

    /// The literal word `w` as a right-nested concatenation of symbols;
    /// ε for the empty word.
    pub fn word(w: &Word) -> Regex {
        w.symbols()
            .iter()
            .rev()
            .fold(None, |acc, &s| {
                Some(match acc {
                    None => Regex::Sym(s),
                    Some(rest) => Regex::concat(Regex::Sym(s), rest),
                })
            })
            .unwrap_or(Regex::Epsilon)
    }

    /// Number of nodes in the term.
    pub fn size(&self) -> usize {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Sym(_) => 1,
            Regex::Star(x) => 1 + x.size(),
            Regex::Concat(l, r)
            | Regex::Intersect(l, r)
            | Regex::Diff(l, r)
            | Regex::Union(l, r) => 1 + l.size() + r.size(),
        }
    }

    fn collect_symbols(&self, out: &mut BTreeSet<Symbol>) {
        match self {
            Regex::Empty | Regex::Epsilon => {}
            Regex::Sym(s) => {
                out.insert(*s);
            }
            Regex::Star(x) => x.collect_symbols(out),
            Regex::Concat(l, r)
            | Regex::Intersect(l, r)
            | Regex::Diff(l, r)
            | Regex::Union(l, r) => {
                l.collect_symbols(out);
                r.collect_symbols(out);
            }
        }
    }
}

/// The total order on terms that canonical unions and intersections sort by.
pub fn term_order(a: &Regex, b: &Regex) -> std::cmp::Ordering {
    a.cmp(b)
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

impl FromStr for Regex {
    type Err = Error;

    /// Parses with any lowercase letter accepted as a symbol.
    fn from_str(s: &str) -> Result<Self> {
        parse_inferred(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn sym(c: char) -> Regex {
        Regex::Sym(Symbol::new(c).unwrap())
    }

    #[test]
    fn term_order_tags() {
        assert_eq!(term_order(&Regex::Empty, &Regex::Epsilon), Ordering::Less);
        assert_eq!(term_order(&sym('a'), &sym('b')), Ordering::Less);
        let e = Regex::union(sym('a'), Regex::star(sym('b')));
        assert_eq!(term_order(&e, &e), Ordering::Equal);

        let ladder = [
            Regex::Empty,
            Regex::Epsilon,
            sym('z'),
            Regex::star(sym('a')),
            Regex::concat(sym('a'), sym('a')),
            Regex::intersect(sym('a'), sym('a')),
            Regex::diff(sym('a'), sym('a')),
            Regex::union(sym('a'), sym('a')),
        ];
        for pair in ladder.windows(2) {
            assert_eq!(term_order(&pair[0], &pair[1]), Ordering::Less, "{:?}", pair);
        }
    }

    #[test]
    fn symbols_are_lowercase_letters() {
        assert!(Symbol::new('a').is_ok());
        assert!(Symbol::new('A').is_err());
        assert!(Symbol::new('0').is_err());
        assert!(Symbol::new('é').is_err());
    }

    #[test]
    fn word_regex_is_right_nested() {
        let w: Word = "abc".parse().unwrap();
        assert_eq!(
            Regex::word(&w),
            Regex::concat(sym('a'), Regex::concat(sym('b'), sym('c')))
        );
        assert_eq!(Regex::word(&Word::empty()), Regex::Epsilon);
    }

    #[test]
    fn words_upto() {
        let ab = Alphabet::from_letters("ab").unwrap();
        let words = Word::all_upto(&ab, 6);
        assert_eq!(words.len(), 127);
        assert_eq!(words[0], Word::empty());
        assert_eq!(words[1].to_string(), "a");
        assert_eq!(words[3].to_string(), "aa");
    }

    #[test]
    fn alphabet_inference() {
        let e: Regex = "a(c+a)*".parse().unwrap();
        assert_eq!(Alphabet::of_exprs([&e]).to_string(), "ac");
        let err = Alphabet::from_letters("aB").unwrap_err();
        assert!(matches!(
            err,
            Error::Alphabet {
                symbol: 'B',
                position: Some(1)
            }
        ));
    }
}
