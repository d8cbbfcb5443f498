//! Deterministic automata whose states are canonical derivatives.

mod equiv;
mod export;

use std::collections::{HashMap, VecDeque};

use crate::derivative::{nullable, DerivCache};
use crate::error::{Error, Result};
use crate::syntax::{canonicalize, Alphabet, Regex, Symbol, Word};

pub use equiv::{equivalent, EquivVerdict, DEFAULT_MAX_PAIRS};
pub use export::{from_json, to_dot, to_json};

pub const DEFAULT_MAX_STATES: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    states: Vec<Regex>,
    alphabet: Vec<Symbol>,
    start: usize,
    accepting: Vec<usize>,
    /// Row-major: `trans[state * alphabet.len() + symbol_index]`.
    trans: Vec<usize>,
}

impl Dfa {
    pub fn states(&self) -> &[Regex] {
        &self.states
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Accepting state indices, ascending.
    pub fn accepting(&self) -> &[usize] {
        &self.accepting
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting.binary_search(&state).is_ok()
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    /// Target of the transition from `state` on `sym`, or `None` when `sym`
    /// is not in the alphabet.
    pub fn next(&self, state: usize, sym: Symbol) -> Option<usize> {
        let col = self.alphabet.binary_search(&sym).ok()?;
        Some(self.trans[state * self.alphabet.len() + col])
    }

    /// All transitions as `(from, symbol, to)`, by state then symbol.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, Symbol, usize)> + '_ {
        (0..self.states.len()).flat_map(move |q| {
            self.alphabet
                .iter()
                .enumerate()
                .map(move |(i, &a)| (q, a, self.trans[q * self.alphabet.len() + i]))
        })
    }

    pub fn accepts(&self, w: &Word) -> Result<bool> {
        let mut q = self.start;
        for (i, &a) in w.iter().enumerate() {
            q = self.next(q, a).ok_or(Error::Alphabet {
                symbol: a.as_char(),
                position: Some(i),
            })?;
        }
        Ok(self.is_accepting(q))
    }

    /// Assembles an automaton from parts, checking that the transition table
    /// is total and every index is in range.
    pub(crate) fn from_parts(
        states: Vec<Regex>,
        alphabet: Vec<Symbol>,
        start: usize,
        mut accepting: Vec<usize>,
        trans: Vec<usize>,
    ) -> Result<Dfa> {
        let n = states.len();
        if n == 0 {
            return Err(Error::InvalidDfa("no states".into()));
        }
        if !alphabet.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidDfa(
                "alphabet must be sorted and duplicate-free".into(),
            ));
        }
        if start >= n {
            return Err(Error::InvalidDfa(format!(
                "start state {start} out of range"
            )));
        }
        if trans.len() != n * alphabet.len() {
            return Err(Error::InvalidDfa("transition table is not total".into()));
        }
        if let Some(bad) = trans.iter().chain(&accepting).find(|&&q| q >= n) {
            return Err(Error::InvalidDfa(format!("state {bad} out of range")));
        }
        accepting.sort_unstable();
        accepting.dedup();
        Ok(Dfa {
            states,
            alphabet,
            start,
            accepting,
            trans,
        })
    }
}

/// Builds the derivative automaton of `e` over `alphabet` by worklist
/// closure. States are numbered in discovery order; the start state is 0.
pub fn build_dfa(e: &Regex, alphabet: &Alphabet, max_states: usize) -> Result<Dfa> {
    let symbols: Vec<Symbol> = alphabet.iter().collect();
    let mut cache = DerivCache::new();
    let start = canonicalize(e);

    let mut index: HashMap<Regex, usize> = HashMap::from([(start.clone(), 0)]);
    let mut states = vec![start];
    let mut trans = Vec::new();
    let mut queue = VecDeque::from([0usize]);

    if max_states == 0 {
        return Err(Error::StateBudgetExceeded { discovered: 1 });
    }
    while let Some(q) = queue.pop_front() {
        // States are dequeued in index order, so rows fill `trans` in order.
        debug_assert_eq!(trans.len(), q * symbols.len());
        for &a in &symbols {
            let d = cache.deriv(a, &states[q]);
            let target = match index.get(&d) {
                Some(&t) => t,
                None => {
                    let t = states.len();
                    if t + 1 > max_states {
                        return Err(Error::StateBudgetExceeded { discovered: t + 1 });
                    }
                    index.insert(d.clone(), t);
                    states.push(d);
                    queue.push_back(t);
                    t
                }
            };
            trans.push(target);
        }
    }

    let accepting = (0..states.len())
        .filter(|&q| nullable(&states[q]))
        .collect();
    Ok(Dfa {
        states,
        alphabet: symbols,
        start: 0,
        accepting,
        trans,
    })
}

pub fn dfa_accepts(d: &Dfa, w: &Word) -> Result<bool> {
    d.accepts(w)
}
