//! Nullability and Brzozowski derivatives.
//!
//! `D_a(E)` denotes the language `{ w : a·w ∈ L(E) }`. Derivatives are built
//! from the canonical smart constructors, so iterating them from a fixed
//! expression reaches only finitely many distinct terms.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::syntax::{
    canonicalize, mk_concat, mk_diff, mk_intersect, mk_star, mk_union, Regex, Symbol, Word,
};

/// Whether the empty word belongs to `L(e)`.
pub fn nullable(e: &Regex) -> bool {
    match e {
        Regex::Empty | Regex::Sym(_) => false,
        Regex::Epsilon | Regex::Star(_) => true,
        Regex::Union(l, r) => nullable(l) || nullable(r),
        Regex::Concat(l, r) | Regex::Intersect(l, r) => nullable(l) && nullable(r),
        Regex::Diff(l, r) => nullable(l) && !nullable(r),
    }
}

/// `1` when `e` is nullable, `0` otherwise.
pub fn delta(e: &Regex) -> Regex {
    if nullable(e) {
        Regex::Epsilon
    } else {
        Regex::Empty
    }
}

/// The canonical derivative of `e` with respect to `a`.
pub fn deriv_sym(a: Symbol, e: &Regex) -> Regex {
    derive(a, &canonicalize(e))
}

/// Derivative of an already-canonical term.
fn derive(a: Symbol, e: &Regex) -> Regex {
    match e {
        Regex::Empty | Regex::Epsilon => Regex::Empty,
        Regex::Sym(b) if *b == a => Regex::Epsilon,
        Regex::Sym(_) => Regex::Empty,
        Regex::Union(l, r) => mk_union(derive(a, l), derive(a, r)),
        // D(EF) = D(E)F + δ(E)D(F)
        Regex::Concat(l, r) => {
            let head = mk_concat(derive(a, l), (**r).clone());
            if nullable(l) {
                mk_union(head, derive(a, r))
            } else {
                head
            }
        }
        Regex::Star(x) => mk_concat(derive(a, x), e.clone()),
        Regex::Intersect(l, r) => mk_intersect(derive(a, l), derive(a, r)),
        Regex::Diff(l, r) => mk_diff(derive(a, l), derive(a, r)),
    }
}

/// `D_w(e)`: symbol derivatives applied left to right, first symbol first.
/// `D_ε(e)` is the canonical form of `e`.
pub fn deriv_word(w: &Word, e: &Regex) -> Regex {
    w.iter().fold(canonicalize(e), |acc, &a| derive(a, &acc))
}

/// Membership test: `w ∈ L(e)` iff `D_w(e)` is nullable.
pub fn matches(e: &Regex, w: &Word) -> bool {
    let mut cur = canonicalize(e);
    for &a in w.iter() {
        if cur == Regex::Empty {
            return false;
        }
        cur = derive(a, &cur);
    }
    nullable(&cur)
}

/// Closed-form word derivative of a concatenation:
///
/// `D_w(EF) = D_w(E)·F + Σ δ(D_p(E))·D_s(F)` over every split `w = p·s`
/// with `s` nonempty (the `p = ε` term is `δ(E)·D_w(F)`).
///
/// This builds the sum directly instead of differentiating `EF`, so it can
/// cross-check [`deriv_word`].
pub fn concat_expansion(w: &Word, e: &Regex, f: &Regex) -> Result<Regex> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let syms = w.symbols();
    let f_canon = canonicalize(f);
    let mut sum = mk_concat(deriv_word(w, e), f_canon.clone());
    for split in 0..syms.len() {
        let prefix = Word::new(syms[..split].to_vec());
        let suffix = Word::new(syms[split..].to_vec());
        let term = mk_concat(
            delta(&deriv_word(&prefix, e)),
            deriv_word(&suffix, &f_canon),
        );
        sum = mk_union(sum, term);
    }
    Ok(sum)
}

/// Closed-form word derivative of a star:
///
/// `D_w(E*) = D_w(E)·E* + Σ δ(D_p(E))·D_s(E*)` over every split `w = p·s`
/// with both `p` and `s` nonempty, where `D_s(E*)` is expanded the same way.
pub fn star_expansion(w: &Word, e: &Regex) -> Result<Regex> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let e = canonicalize(e);
    Ok(star_expansion_canon(w.symbols(), &e))
}

fn star_expansion_canon(w: &[Symbol], e: &Regex) -> Regex {
    let star = mk_star(e.clone());
    let mut sum = mk_concat(deriv_word(&Word::new(w.to_vec()), e), star);
    for split in 1..w.len() {
        let prefix = Word::new(w[..split].to_vec());
        if nullable(&deriv_word(&prefix, e)) {
            sum = mk_union(sum, star_expansion_canon(&w[split..], e));
        }
    }
    sum
}

/// Memo table for derivatives of canonical terms, keyed on
/// `(symbol, term)`. Results are identical to [`deriv_sym`].
#[derive(Debug, Default)]
pub struct DerivCache {
    table: HashMap<(Symbol, Regex), Regex>,
}

impl DerivCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Derivative of a canonical term.
    pub fn deriv(&mut self, a: Symbol, e: &Regex) -> Regex {
        if let Some(d) = self.table.get(&(a, e.clone())) {
            return d.clone();
        }
        let d = derive(a, e);
        self.table.insert((a, e.clone()), d.clone());
        d
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}
