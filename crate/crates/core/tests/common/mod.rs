#![allow(dead_code)]

use derivrex::syntax::{parse_inferred, Alphabet, Regex, Symbol, Word};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn re(text: &str) -> Regex {
    parse_inferred(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn word(text: &str) -> Word {
    text.parse().unwrap()
}

pub fn sym(c: char) -> Symbol {
    Symbol::new(c).unwrap()
}

pub fn ab() -> Alphabet {
    Alphabet::from_letters("ab").unwrap()
}

/// Every expression written out in the algebraic identities, the
/// non-identities (with E = a, F = b) and the worked derivative examples.
pub const WRITTEN_EXPRESSIONS: &[&str] = &[
    // non-identities
    "(a+b)*",
    "a*+b*",
    "(ab)*",
    "a*b*",
    "ab",
    "ba",
    // identities
    "(1+a)*",
    "a*",
    "a*(1+a)",
    "(1+a)+a*",
    "b+a*b",
    "a*b",
    "b+ba*",
    "ba*",
    "1+aa*",
    "(a*b*)*",
    "0a",
    "a0",
    "0",
    "0+a",
    "a+0",
    "a",
    "1+a*",
    "a(b+c)",
    "ab+ac",
    "(a+b)c",
    "ac+bc",
    "(a*+b*)*",
    "1a",
    "a1",
    "1*",
    "1",
    // worked derivatives
    "a(a+b)*",
    "ab(a+b)*",
    "(a+b)*a",
    "b(a+b)*",
    "(a+b)*a+1",
    "(a+b)ab",
];

/// Random term of depth at most `depth` over {a, b}, using every operator.
pub fn random_regex(rng: &mut ChaCha8Rng, depth: usize) -> Regex {
    let leaf = |rng: &mut ChaCha8Rng| match rng.gen_range(0..6) {
        0 => Regex::Empty,
        1 => Regex::Epsilon,
        2 | 3 => Regex::Sym(sym('a')),
        _ => Regex::Sym(sym('b')),
    };
    if depth == 0 || rng.gen_bool(0.2) {
        return leaf(rng);
    }
    match rng.gen_range(0..6) {
        0 => Regex::union(random_regex(rng, depth - 1), random_regex(rng, depth - 1)),
        1 => Regex::concat(random_regex(rng, depth - 1), random_regex(rng, depth - 1)),
        2 => Regex::star(random_regex(rng, depth - 1)),
        3 => Regex::intersect(random_regex(rng, depth - 1), random_regex(rng, depth - 1)),
        4 => Regex::diff(random_regex(rng, depth - 1), random_regex(rng, depth - 1)),
        _ => leaf(rng),
    }
}

fn uses_boolean_ops(e: &Regex) -> bool {
    match e {
        Regex::Intersect(..) | Regex::Diff(..) => true,
        Regex::Empty | Regex::Epsilon | Regex::Sym(_) => false,
        Regex::Star(x) => uses_boolean_ops(x),
        Regex::Concat(l, r) | Regex::Union(l, r) => uses_boolean_ops(l) || uses_boolean_ops(r),
    }
}

/// Twenty seeded random terms of depth ≤ 4 that are not single leaves; at
/// least half of them use `&` or `-`.
pub fn random_corpus() -> Vec<Regex> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_d371);
    let mut out: Vec<Regex> = Vec::new();
    let mut boolean = 0;
    while out.len() < 20 {
        let e = random_regex(&mut rng, 4);
        if e.size() < 3 || out.contains(&e) {
            continue;
        }
        let has_bool = uses_boolean_ops(&e);
        if !has_bool && out.len() - boolean >= 10 {
            continue;
        }
        boolean += usize::from(has_bool);
        out.push(e);
    }
    out
}

/// The written expressions followed by the random ones.
pub fn corpus() -> Vec<Regex> {
    let mut out: Vec<Regex> = WRITTEN_EXPRESSIONS.iter().map(|t| re(t)).collect();
    out.extend(random_corpus());
    out
}

pub fn arb_symbol() -> impl Strategy<Value = Symbol> {
    prop_oneof![Just(sym('a')), Just(sym('b'))]
}

pub fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(arb_symbol(), 0..=max_len).prop_map(Word::new)
}

/// Arbitrary terms over {a, b}, including `&` and `-`.
pub fn arb_regex() -> impl Strategy<Value = Regex> {
    let leaf = prop_oneof![
        1 => Just(Regex::Empty),
        1 => Just(Regex::Epsilon),
        3 => arb_symbol().prop_map(Regex::Sym),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            3 => (inner.clone(), inner.clone()).prop_map(|(l, r)| Regex::union(l, r)),
            3 => (inner.clone(), inner.clone()).prop_map(|(l, r)| Regex::concat(l, r)),
            2 => inner.clone().prop_map(Regex::star),
            1 => (inner.clone(), inner.clone()).prop_map(|(l, r)| Regex::intersect(l, r)),
            1 => (inner.clone(), inner).prop_map(|(l, r)| Regex::diff(l, r)),
        ]
    })
}
