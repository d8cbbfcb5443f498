use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::derivative::{nullable, DerivCache};
use crate::error::{Error, Result};
use crate::syntax::{canonicalize, Alphabet, Regex, Symbol, Word};

pub const DEFAULT_MAX_PAIRS: usize = 100_000;

/// Outcome of an equivalence query. A counterexample is present exactly
/// when the languages differ, and is a shortest word accepted by one side
/// only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivVerdict {
    pub equal: bool,
    pub counterexample: Option<Word>,
}

impl EquivVerdict {
    fn equal() -> Self {
        EquivVerdict {
            equal: true,
            counterexample: None,
        }
    }

    fn refuted(w: Word) -> Self {
        EquivVerdict {
            equal: false,
            counterexample: Some(w),
        }
    }
}

#[derive(Serialize)]
struct VerdictDoc {
    equal: bool,
    counterexample: Option<String>,
}

impl Serialize for EquivVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VerdictDoc {
            equal: self.equal,
            counterexample: self.counterexample.as_ref().map(Word::to_string),
        }
        .serialize(s)
    }
}

/// Decides `L(e) = L(f)` by breadth-first exploration of derivative pairs.
///
/// Pairs are visited in order of the length of the word reaching them, and
/// symbols in alphabet order, so the first pair whose components disagree on
/// nullability yields a shortest (then alphabetically least) counterexample.
pub fn equivalent(
    e: &Regex,
    f: &Regex,
    alphabet: &Alphabet,
    max_pairs: usize,
) -> Result<EquivVerdict> {
    let symbols: Vec<Symbol> = alphabet.iter().collect();
    let mut cache = DerivCache::new();
    let start = (canonicalize(e), canonicalize(f));

    if nullable(&start.0) != nullable(&start.1) {
        return Ok(EquivVerdict::refuted(Word::empty()));
    }
    if max_pairs == 0 {
        return Err(Error::PairBudgetExceeded { explored: 1 });
    }

    // parent[i] = (index of predecessor pair, symbol taken)
    let mut parent: Vec<Option<(usize, Symbol)>> = vec![None];
    let mut pairs = vec![start.clone()];
    let mut seen: HashMap<(Regex, Regex), usize> = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([0usize]);

    while let Some(i) = queue.pop_front() {
        for &a in &symbols {
            let next = {
                let (l, r) = &pairs[i];
                (cache.deriv(a, l), cache.deriv(a, r))
            };
            if seen.contains_key(&next) {
                continue;
            }
            let j = pairs.len();
            parent.push(Some((i, a)));
            if nullable(&next.0) != nullable(&next.1) {
                return Ok(EquivVerdict::refuted(path_to(&parent, j)));
            }
            if j + 1 > max_pairs {
                return Err(Error::PairBudgetExceeded { explored: j + 1 });
            }
            seen.insert(next.clone(), j);
            pairs.push(next);
            queue.push_back(j);
        }
    }
    Ok(EquivVerdict::equal())
}

fn path_to(parent: &[Option<(usize, Symbol)>], mut i: usize) -> Word {
    let mut syms = Vec::new();
    while let Some((p, a)) = parent[i] {
        syms.push(a);
        i = p;
    }
    syms.reverse();
    Word::new(syms)
}
