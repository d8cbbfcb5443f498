use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Dfa;
use crate::error::{Error, Result};
use crate::syntax::{parse_inferred, Symbol};

/// Graphviz rendering. Nodes are numbered by state index and labeled with
/// the state's expression; accepting states get a double circle.
pub fn to_dot(d: &Dfa) -> String {
    let mut out = String::new();
    out.push_str("digraph dfa {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=circle];\n");
    out.push_str("  start [shape=point, label=\"\"];\n");
    for (q, state) in d.states().iter().enumerate() {
        let shape = if d.is_accepting(q) {
            "doublecircle"
        } else {
            "circle"
        };
        let _ = writeln!(
            out,
            "  {q} [label=\"{}\", shape={shape}];",
            escape(&state.to_string())
        );
    }
    let _ = writeln!(out, "  start -> {};", d.start());
    for (from, a, to) in d.transitions() {
        let _ = writeln!(out, "  {from} -> {to} [label=\"{a}\"];");
    }
    out.push_str("}\n");
    out
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Serialize, Deserialize)]
struct DfaDoc {
    alphabet: Vec<String>,
    states: Vec<String>,
    start: usize,
    accepting: Vec<usize>,
    transitions: Vec<TransitionDoc>,
}

#[derive(Serialize, Deserialize)]
struct TransitionDoc {
    from: usize,
    symbol: String,
    to: usize,
}

/// Compact JSON with fields in the order `alphabet`, `states`, `start`,
/// `accepting`, `transitions`.
pub fn to_json(d: &Dfa) -> String {
    let doc = DfaDoc {
        alphabet: d.alphabet().iter().map(Symbol::to_string).collect(),
        states: d.states().iter().map(|s| s.to_string()).collect(),
        start: d.start(),
        accepting: d.accepting().to_vec(),
        transitions: d
            .transitions()
            .map(|(from, a, to)| TransitionDoc {
                from,
                symbol: a.to_string(),
                to,
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("automaton document serializes")
}

/// Loads a document written by [`to_json`].
pub fn from_json(text: &str) -> Result<Dfa> {
    let doc: DfaDoc = serde_json::from_str(text)?;
    let alphabet = doc
        .alphabet
        .iter()
        .map(|s| single_symbol(s))
        .collect::<Result<Vec<_>>>()?;
    let states = doc
        .states
        .iter()
        .map(|s| parse_inferred(s))
        .collect::<Result<Vec<_>>>()?;

    let n = states.len();
    let k = alphabet.len();
    let mut trans = vec![None; n * k];
    for t in &doc.transitions {
        let a = single_symbol(&t.symbol)?;
        let col = alphabet
            .iter()
            .position(|&s| s == a)
            .ok_or_else(|| Error::InvalidDfa(format!("transition symbol '{a}' not in alphabet")))?;
        if t.from >= n || t.to >= n {
            return Err(Error::InvalidDfa(format!(
                "transition {} -> {} out of range",
                t.from, t.to
            )));
        }
        let slot = &mut trans[t.from * k + col];
        if slot.replace(t.to).is_some() {
            return Err(Error::InvalidDfa(format!(
                "duplicate transition from {} on '{a}'",
                t.from
            )));
        }
    }
    let trans = trans
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidDfa("transition table is not total".into()))?;
    Dfa::from_parts(states, alphabet, doc.start, doc.accepting, trans)
}

fn single_symbol(s: &str) -> Result<Symbol> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Symbol::new(c),
        _ => Err(Error::InvalidDfa(format!(
            "symbol {s:?} is not a single letter"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{build_dfa, DEFAULT_MAX_STATES};
    use crate::syntax::Alphabet;

    fn dfa(text: &str) -> Dfa {
        let ab = Alphabet::from_letters("ab").unwrap();
        build_dfa(&parse_inferred(text).unwrap(), &ab, DEFAULT_MAX_STATES).unwrap()
    }

    fn node_lines(dot: &str) -> Vec<&str> {
        dot.lines()
            .filter(|l| l.contains("[label=") && !l.contains("->") && !l.contains("start"))
            .collect()
    }

    fn edge_lines(dot: &str) -> Vec<&str> {
        dot.lines()
            .filter(|l| l.contains("->") && l.contains("label"))
            .collect()
    }

    #[test]
    fn json_of_empty_language() {
        assert_eq!(
            to_json(&dfa("0")),
            r#"{"alphabet":["a","b"],"states":["0"],"start":0,"accepting":[],"transitions":[{"from":0,"symbol":"a","to":0},{"from":0,"symbol":"b","to":0}]}"#
        );
    }

    #[test]
    fn dot_of_empty_language() {
        let dot = to_dot(&dfa("0"));
        assert_eq!(node_lines(&dot), ["  0 [label=\"0\", shape=circle];"]);
        assert!(dot.contains("start -> 0;"));
    }

    #[test]
    fn dot_shapes() {
        let dot = to_dot(&dfa("a(a+b)*"));
        assert_eq!(node_lines(&dot).len(), 3);
        assert_eq!(edge_lines(&dot).len(), 6);
        assert!(dot.contains("1 [label=\"(a+b)*\", shape=doublecircle];"));

        let dot = to_dot(&dfa("1"));
        assert_eq!(
            node_lines(&dot),
            [
                "  0 [label=\"1\", shape=doublecircle];",
                "  1 [label=\"0\", shape=circle];"
            ]
        );
    }

    #[test]
    fn json_round_trip() {
        for text in ["0", "a(a+b)*", "(a+b)*a", "(ab&a*b)-(b*+a)"] {
            let d = dfa(text);
            let json = to_json(&d);
            let back = from_json(&json).unwrap();
            assert_eq!(back, d, "{text}");
            assert_eq!(to_json(&back), json);
        }
    }

    #[test]
    fn loader_rejects_partial_tables() {
        let partial = r#"{"alphabet":["a","b"],"states":["0"],"start":0,"accepting":[],"transitions":[{"from":0,"symbol":"a","to":0}]}"#;
        assert!(matches!(from_json(partial), Err(Error::InvalidDfa(_))));
        let bad_start =
            r#"{"alphabet":[],"states":["0"],"start":3,"accepting":[],"transitions":[]}"#;
        assert!(matches!(from_json(bad_start), Err(Error::InvalidDfa(_))));
        assert!(matches!(from_json("{"), Err(Error::Json(_))));
    }
}
