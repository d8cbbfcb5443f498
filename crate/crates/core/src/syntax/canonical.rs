//! Canonical form and the smart constructors that maintain it.
//!
//! A canonical term satisfies:
//! - unions are flattened, free of `0`, sorted by [`term_order`] without
//!   duplicates, and nested to the left;
//! - concatenations are nested to the right and contain no `1` or `0`
//!   factor (a `0` factor collapses the whole product);
//! - `1*` and `0*` are `1`, and `x**` is `x*`;
//! - intersections are flattened, sorted, duplicate-free and collapse to
//!   `0` when any operand is `0`;
//! - `x - 0` is `x`, while `x - x` and `0 - x` are `0`.
//!
//! Every `mk_*` constructor takes canonical operands and returns a
//! canonical term.
//!
//! [`term_order`]: super::term_order

use std::sync::Arc;

use super::Regex;

pub fn canonicalize(e: &Regex) -> Regex {
    match e {
        Regex::Empty | Regex::Epsilon | Regex::Sym(_) => e.clone(),
        Regex::Star(x) => mk_star(canonicalize(x)),
        Regex::Concat(l, r) => mk_concat(canonicalize(l), canonicalize(r)),
        Regex::Intersect(l, r) => mk_intersect(canonicalize(l), canonicalize(r)),
        Regex::Diff(l, r) => mk_diff(canonicalize(l), canonicalize(r)),
        Regex::Union(l, r) => mk_union(canonicalize(l), canonicalize(r)),
    }
}

pub fn is_canonical(e: &Regex) -> bool {
    canonicalize(e) == *e
}

pub fn mk_union(a: Regex, b: Regex) -> Regex {
    let mut items = Vec::new();
    flatten_union(a, &mut items);
    flatten_union(b, &mut items);
    items.retain(|x| *x != Regex::Empty);
    items.sort();
    items.dedup();
    fold_left(items, Regex::Union).unwrap_or(Regex::Empty)
}

pub fn mk_intersect(a: Regex, b: Regex) -> Regex {
    let mut items = Vec::new();
    flatten_intersect(a, &mut items);
    flatten_intersect(b, &mut items);
    if items.contains(&Regex::Empty) {
        return Regex::Empty;
    }
    items.sort();
    items.dedup();
    fold_left(items, Regex::Intersect).expect("intersection has operands")
}

pub fn mk_concat(a: Regex, b: Regex) -> Regex {
    match (a, b) {
        (Regex::Empty, _) | (_, Regex::Empty) => Regex::Empty,
        (Regex::Epsilon, x) | (x, Regex::Epsilon) => x,
        // Re-nest (xy)z as x(yz).
        (Regex::Concat(x, y), z) => {
            let tail = mk_concat(unwrap_arc(y), z);
            Regex::Concat(x, Arc::new(tail))
        }
        (x, y) => Regex::concat(x, y),
    }
}

pub fn mk_star(a: Regex) -> Regex {
    match a {
        Regex::Empty | Regex::Epsilon => Regex::Epsilon,
        s @ Regex::Star(_) => s,
        x => Regex::star(x),
    }
}

pub fn mk_diff(a: Regex, b: Regex) -> Regex {
    if b == Regex::Empty {
        a
    } else if a == Regex::Empty || a == b {
        Regex::Empty
    } else {
        Regex::diff(a, b)
    }
}

fn flatten_union(e: Regex, out: &mut Vec<Regex>) {
    match e {
        Regex::Union(l, r) => {
            flatten_union(unwrap_arc(l), out);
            flatten_union(unwrap_arc(r), out);
        }
        x => out.push(x),
    }
}

fn flatten_intersect(e: Regex, out: &mut Vec<Regex>) {
    match e {
        Regex::Intersect(l, r) => {
            flatten_intersect(unwrap_arc(l), out);
            flatten_intersect(unwrap_arc(r), out);
        }
        x => out.push(x),
    }
}

fn fold_left(items: Vec<Regex>, node: fn(Arc<Regex>, Arc<Regex>) -> Regex) -> Option<Regex> {
    let mut it = items.into_iter();
    let first = it.next()?;
    Some(it.fold(first, |acc, x| node(Arc::new(acc), Arc::new(x))))
}

fn unwrap_arc(e: Arc<Regex>) -> Regex {
    Arc::try_unwrap(e).unwrap_or_else(|shared| (*shared).clone())
}
