//! Built-in suite of algebraic laws checked by the equivalence procedure.

use crate::automaton::equivalent;
use crate::derivative::deriv_sym;
use crate::error::Result;
use crate::syntax::{parse_inferred, render, Alphabet, Regex, Symbol, Word};

#[derive(Clone, Debug)]
pub enum CheckKind {
    /// Every expression in the chain denotes the same language.
    Equal(Vec<Regex>),
    /// The two expressions differ; a counterexample must be found.
    Unequal(Regex, Regex),
    /// The derivative of `expr` by `symbol` equals `expected`.
    Quotient {
        symbol: Symbol,
        expr: Regex,
        expected: Regex,
    },
    /// A counterexample to a plausible but false rule: the two
    /// expressions are expected to be equal or unequal as given, and the
    /// remark explains what that refutes.
    Note {
        left: Regex,
        right: Regex,
        expect_equal: bool,
        remark: &'static str,
    },
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub line: String,
    /// Counterexample found for an `Unequal` check.
    pub counterexample: Option<Word>,
}

fn re(text: &str) -> Regex {
    parse_inferred(text).expect("built-in expression parses")
}

fn equal(name: &str, chain: &[&str]) -> Check {
    Check {
        name: name.into(),
        kind: CheckKind::Equal(chain.iter().map(|t| re(t)).collect()),
    }
}

fn unequal(name: &str, e: &str, f: &str) -> Check {
    Check {
        name: name.into(),
        kind: CheckKind::Unequal(re(e), re(f)),
    }
}

fn sym(c: char) -> Symbol {
    Symbol::new(c).expect("letter")
}

/// The full list of checks, in report order.
pub fn suite() -> Vec<Check> {
    let mut checks = vec![
        // Basic algebra of union, concatenation and star.
        equal("union commutes", &["a+b", "b+a"]),
        equal("union associates", &["(a+b)+c", "a+(b+c)"]),
        equal("star is idempotent", &["(a*)*", "a*"]),
        equal(
            "star prefix distributes over union",
            &["a*(b+c)", "a*b+a*c"],
        ),
        // Ground identities over letters.
        equal("optional letter under star", &["(1+a)*", "a*"]),
        equal("star absorbs optional suffix", &["a*(1+a)", "a*"]),
        equal("star absorbs optional summand", &["(1+a)+a*", "a*"]),
        equal("starred prefix absorbs bare suffix", &["b+a*b", "a*b"]),
        equal("starred suffix absorbs bare prefix", &["b+ba*", "ba*"]),
        equal("star unrolls once", &["1+aa*", "a*"]),
        equal("star of union via product of stars", &["(a+b)*", "(a*b*)*"]),
        equal("empty set annihilates concatenation", &["0a", "a0", "0"]),
        equal("empty set is the union identity", &["0+a", "a+0", "a"]),
        equal("star already contains the empty word", &["1+a*", "a*"]),
        equal(
            "concatenation distributes on the left",
            &["a(b+c)", "ab+ac"],
        ),
        equal(
            "concatenation distributes on the right",
            &["(a+b)c", "ac+bc"],
        ),
        equal("star of union variants", &["(a+b)*", "(a*+b*)*", "(a*b*)*"]),
        equal(
            "empty word is the concatenation identity",
            &["1a", "a1", "a"],
        ),
        equal("star of the empty word", &["1*", "1"]),
        // Non-identities.
        unequal("star does not distribute over union", "(a+b)*", "a*+b*"),
        unequal(
            "star does not distribute over concatenation",
            "(ab)*",
            "a*b*",
        ),
        unequal("concatenation does not commute", "ab", "ba"),
        Check {
            name: "concatenation commutes for powers of one letter".into(),
            kind: CheckKind::Note {
                left: re("a(aa)"),
                right: re("(aa)a"),
                expect_equal: true,
                remark: "distinct operands can still commute",
            },
        },
    ];

    // D_a((aw)*) = w(aw)* for literal words w. The variant with an extra
    // empty-word summand is refuted by the empty word itself.
    for w in ["b", "ba", "bab"] {
        let w_re = Regex::word(&w.parse().expect("word"));
        let aw_star = Regex::star(Regex::concat(Regex::Sym(sym('a')), w_re.clone()));
        let tail = Regex::concat(w_re, aw_star.clone());
        checks.push(Check {
            name: format!("quotient of {} by a", render(&aw_star)),
            kind: CheckKind::Quotient {
                symbol: sym('a'),
                expr: aw_star.clone(),
                expected: tail.clone(),
            },
        });
        checks.push(Check {
            name: format!(
                "quotient of {} by a excludes the empty word",
                render(&aw_star)
            ),
            kind: CheckKind::Note {
                left: deriv_sym(sym('a'), &aw_star),
                right: Regex::union(Regex::Epsilon, tail),
                expect_equal: false,
                remark: "a alone is not in the starred language",
            },
        });
    }
    // D_a((aE)*) = E(aE)* for arbitrary E.
    for e in ["b", "a+b", "b*"] {
        let e_re = re(e);
        let ae_star = Regex::star(Regex::concat(Regex::Sym(sym('a')), e_re.clone()));
        checks.push(Check {
            name: format!("quotient of {} by a", render(&ae_star)),
            kind: CheckKind::Quotient {
                symbol: sym('a'),
                expr: ae_star.clone(),
                expected: Regex::concat(e_re, ae_star),
            },
        });
    }
    checks
}

/// Runs every check in [`suite`] over the alphabet `{a, b, c}`.
pub fn run_suite(max_pairs: usize) -> Result<Vec<CheckOutcome>> {
    let alphabet = Alphabet::from_letters("abc")?;
    suite()
        .into_iter()
        .map(|c| run_check(c, &alphabet, max_pairs))
        .collect()
}

fn run_check(check: Check, alphabet: &Alphabet, max_pairs: usize) -> Result<CheckOutcome> {
    let Check { name, kind } = check;
    let outcome = match kind {
        CheckKind::Equal(chain) => {
            let mut passed = true;
            let mut failure = String::new();
            for pair in chain.windows(2) {
                let v = equivalent(&pair[0], &pair[1], alphabet, max_pairs)?;
                if let Some(w) = v.counterexample {
                    passed = false;
                    failure = format!(" (differ on {})", render(&Regex::word(&w)));
                    break;
                }
            }
            let shown: Vec<String> = chain.iter().map(render).collect();
            let verdict = if passed { "equal" } else { "NOT equal" };
            CheckOutcome {
                line: format!("{name}: {}: {verdict}{failure}", shown.join(" = ")),
                name,
                passed,
                counterexample: None,
            }
        }
        CheckKind::Unequal(e, f) => {
            let v = equivalent(&e, &f, alphabet, max_pairs)?;
            let detail = match &v.counterexample {
                Some(w) => format!(
                    "unequal as expected, counterexample {}",
                    render(&Regex::word(w))
                ),
                None => "equal, expected unequal".to_string(),
            };
            CheckOutcome {
                line: format!("{name}: {} vs {}: {detail}", render(&e), render(&f)),
                name,
                passed: !v.equal,
                counterexample: v.counterexample,
            }
        }
        CheckKind::Quotient {
            symbol,
            expr,
            expected,
        } => {
            let d = deriv_sym(symbol, &expr);
            let v = equivalent(&d, &expected, alphabet, max_pairs)?;
            CheckOutcome {
                line: format!(
                    "{name}: D_{symbol}({}) = {} ~ {}: {}",
                    render(&expr),
                    render(&d),
                    render(&expected),
                    if v.equal { "equal" } else { "NOT equal" }
                ),
                name,
                passed: v.equal,
                counterexample: None,
            }
        }
        CheckKind::Note {
            left: e,
            right: f,
            expect_equal,
            remark,
        } => {
            let v = equivalent(&e, &f, alphabet, max_pairs)?;
            let passed = v.equal == expect_equal;
            let detail = match (&v.counterexample, passed) {
                (None, true) => format!("equal; {remark}"),
                (Some(w), true) => format!(
                    "unequal, counterexample {}; {remark}",
                    render(&Regex::word(w))
                ),
                (None, false) => "equal, expected unequal".to_string(),
                (Some(w), false) => format!("unequal, counterexample {}", render(&Regex::word(w))),
            };
            let op = if expect_equal { "=" } else { "vs" };
            CheckOutcome {
                line: format!("{name}: {} {op} {}: {detail}", render(&e), render(&f)),
                name,
                passed,
                counterexample: None,
            }
        }
    };
    Ok(outcome)
}
