//! Brute-force language semantics.
//!
//! Computes `{ w ∈ L(E) : |w| ≤ k }` directly from the set semantics of each
//! operator, without derivatives or canonicalization, so it can serve as an
//! independent reference for the rest of the crate.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::syntax::{Regex, Symbol, Word};

pub const DEFAULT_ENUM_CAP: usize = 1_000_000;

/// The words of a language up to a length bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LangSample {
    bound: usize,
    words: BTreeSet<Word>,
}

impl LangSample {
    pub fn new(bound: usize, words: BTreeSet<Word>) -> Self {
        debug_assert!(words.iter().all(|w| w.len() <= bound));
        LangSample { bound, words }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Restricts the sample to words of length at most `bound`.
    pub fn truncate(&self, bound: usize) -> LangSample {
        let words = self
            .words
            .iter()
            .filter(|w| w.len() <= bound)
            .cloned()
            .collect();
        LangSample {
            bound: bound.min(self.bound),
            words,
        }
    }
}

/// One word per line in lexicographic order; ε is an empty line.
impl fmt::Display for LangSample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.words {
            writeln!(f, "{w}")?;
        }
        Ok(())
    }
}

pub fn enumerate_lang(e: &Regex, k: usize) -> Result<LangSample> {
    enumerate_lang_capped(e, k, DEFAULT_ENUM_CAP)
}

/// Like [`enumerate_lang`], failing once any intermediate slice holds more
/// than `cap` words.
pub fn enumerate_lang_capped(e: &Regex, k: usize, cap: usize) -> Result<LangSample> {
    let words = Enumerator { bound: k, cap }.slice(e)?;
    Ok(LangSample { bound: k, words })
}

struct Enumerator {
    bound: usize,
    cap: usize,
}

impl Enumerator {
    fn checked(&self, set: BTreeSet<Word>) -> Result<BTreeSet<Word>> {
        if set.len() > self.cap {
            Err(Error::EnumerationBudgetExceeded { cap: self.cap })
        } else {
            Ok(set)
        }
    }

    fn slice(&self, e: &Regex) -> Result<BTreeSet<Word>> {
        let set = match e {
            Regex::Empty => BTreeSet::new(),
            Regex::Epsilon => BTreeSet::from([Word::empty()]),
            Regex::Sym(s) => {
                if self.bound >= 1 {
                    BTreeSet::from([Word::new(vec![*s])])
                } else {
                    BTreeSet::new()
                }
            }
            Regex::Union(l, r) => {
                let mut a = self.slice(l)?;
                a.extend(self.slice(r)?);
                a
            }
            Regex::Intersect(l, r) => {
                let a = self.slice(l)?;
                let b = self.slice(r)?;
                a.intersection(&b).cloned().collect()
            }
            Regex::Diff(l, r) => {
                let a = self.slice(l)?;
                let b = self.slice(r)?;
                a.difference(&b).cloned().collect()
            }
            Regex::Concat(l, r) => {
                let a = self.slice(l)?;
                let b = self.slice(r)?;
                let mut out = BTreeSet::new();
                for u in &a {
                    for v in &b {
                        if u.len() + v.len() <= self.bound {
                            out.insert(u.concat(v));
                            if out.len() > self.cap {
                                return Err(Error::EnumerationBudgetExceeded { cap: self.cap });
                            }
                        }
                    }
                }
                out
            }
            Regex::Star(x) => {
                // Fixpoint of appending nonempty factor words.
                let factors: Vec<Word> = self
                    .slice(x)?
                    .into_iter()
                    .filter(|w| !w.is_empty())
                    .collect();
                let mut out = BTreeSet::from([Word::empty()]);
                let mut frontier = vec![Word::empty()];
                while !frontier.is_empty() {
                    let mut next = Vec::new();
                    for u in &frontier {
                        for v in &factors {
                            if u.len() + v.len() <= self.bound {
                                let uv = u.concat(v);
                                if out.insert(uv.clone()) {
                                    next.push(uv);
                                }
                            }
                        }
                    }
                    if out.len() > self.cap {
                        return Err(Error::EnumerationBudgetExceeded { cap: self.cap });
                    }
                    frontier = next;
                }
                out
            }
        };
        self.checked(set)
    }
}

/// The left quotient `{ w : a·w ∈ S }`, with bound one less than `s`.
pub fn quotient(s: &LangSample, a: Symbol) -> Result<LangSample> {
    if s.bound == 0 {
        return Err(Error::ZeroBound);
    }
    let words = s
        .words
        .iter()
        .filter_map(|w| match w.symbols().split_first() {
            Some((&head, rest)) if head == a => Some(Word::new(rest.to_vec())),
            _ => None,
        })
        .collect();
    Ok(LangSample {
        bound: s.bound - 1,
        words,
    })
}

pub fn lang_equal_upto(e: &Regex, f: &Regex, k: usize) -> Result<bool> {
    Ok(enumerate_lang(e, k)?.words == enumerate_lang(f, k)?.words)
}

/// Length of the shortest word in exactly one of `L(e)`, `L(f)`, searching
/// lengths up to `max_len`.
pub fn shortest_difference_len(e: &Regex, f: &Regex, max_len: usize) -> Result<Option<usize>> {
    let a = enumerate_lang(e, max_len)?;
    let b = enumerate_lang(f, max_len)?;
    Ok(a.words.symmetric_difference(&b.words).map(Word::len).min())
}
