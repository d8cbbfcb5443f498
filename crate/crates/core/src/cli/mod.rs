//! Command-line front end.
//!
//! Exit status: 0 for success or a positive verdict, 1 for a negative
//! verdict (no match, unequal, failed identity check), 2 for errors.

mod identities;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::automaton::{
    build_dfa, equivalent, to_dot, to_json, Dfa, DEFAULT_MAX_PAIRS, DEFAULT_MAX_STATES,
};
use crate::derivative::{deriv_word, matches, nullable};
use crate::error::Result;
use crate::oracle::{enumerate_lang_capped, DEFAULT_ENUM_CAP};
use crate::syntax::{parse, parse_inferred, render, Alphabet, Regex, Word};

pub use identities::{run_suite, suite, Check, CheckKind, CheckOutcome};

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct SessionConfig {
    /// Explicit alphabet; `None` means the letters of the command's
    /// expressions.
    pub alphabet: Option<Alphabet>,
    pub max_states: usize,
    pub max_pairs: usize,
    pub enum_cap: usize,
    pub output_format: OutputFormat,
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig {
            alphabet: None,
            max_states: DEFAULT_MAX_STATES,
            max_pairs: DEFAULT_MAX_PAIRS,
            enum_cap: DEFAULT_ENUM_CAP,
            output_format: OutputFormat::Text,
        }
    }
}

/// What a command prints to standard output, and its exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub status: u8,
}

impl Outcome {
    fn yes(stdout: String) -> Self {
        Outcome {
            stdout,
            status: EXIT_YES,
        }
    }

    fn verdict(stdout: String, ok: bool) -> Self {
        Outcome {
            stdout,
            status: if ok { EXIT_YES } else { EXIT_NO },
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "derivrex",
    version,
    about = "Regular expressions via Brzozowski derivatives"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Alphabet letters, e.g. "ab" (default: letters of the expressions)
    #[arg(long, global = true)]
    alphabet: Option<String>,

    /// Output format (dfa defaults to dot, other commands to text)
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STATES, value_parser = positive)]
    max_states: usize,

    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PAIRS, value_parser = positive)]
    max_pairs: usize,

    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_CAP, value_parser = positive)]
    enum_cap: usize,

    /// Length bound for `enum`
    #[arg(long, global = true, default_value_t = 6)]
    bound: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the derivative of EXPR by WORD and whether it is nullable
    Derive {
        expr: String,
        #[arg(default_value = "")]
        word: String,
    },
    /// Test whether WORD belongs to the language of EXPR
    Match {
        expr: String,
        #[arg(default_value = "")]
        word: String,
    },
    /// Emit the derivative automaton of EXPR
    Dfa { expr: String },
    /// Decide whether two expressions denote the same language
    Equiv { expr1: String, expr2: String },
    /// List the words of EXPR up to --bound letters
    Enum { expr: String },
    /// Run the built-in suite of algebraic identities and non-identities
    CheckIdentities,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                return EXIT_ERROR;
            }
            let _ = stdout.write_all(text.as_bytes());
            return EXIT_YES;
        }
    };
    match dispatch(cli) {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            outcome.status
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    let alphabet = cli
        .alphabet
        .as_deref()
        .map(Alphabet::from_letters)
        .transpose()?;
    let default_format = match cli.command {
        Command::Dfa { .. } => OutputFormat::Dot,
        _ => OutputFormat::Text,
    };
    let config = SessionConfig {
        alphabet,
        max_states: cli.max_states,
        max_pairs: cli.max_pairs,
        enum_cap: cli.enum_cap,
        output_format: cli.format.unwrap_or(default_format),
    };
    match &cli.command {
        Command::Derive { expr, word } => cmd_derive(expr, word, &config),
        Command::Match { expr, word } => cmd_match(expr, word, &config),
        Command::Dfa { expr } => cmd_dfa(expr, &config),
        Command::Equiv { expr1, expr2 } => cmd_equiv(expr1, expr2, &config),
        Command::Enum { expr } => cmd_enum(expr, cli.bound, &config),
        Command::CheckIdentities => cmd_check_identities(&config),
    }
}

/// Parses the command's expressions and settles the session alphabet:
/// the explicit one if given, otherwise the letters that occur.
fn parse_all(texts: &[&str], config: &SessionConfig) -> Result<(Vec<Regex>, Alphabet)> {
    match &config.alphabet {
        Some(alphabet) => {
            let exprs = texts
                .iter()
                .map(|t| parse(t, alphabet))
                .collect::<Result<Vec<_>>>()?;
            Ok((exprs, alphabet.clone()))
        }
        None => {
            let exprs = texts
                .iter()
                .map(|t| parse_inferred(t))
                .collect::<Result<Vec<_>>>()?;
            let alphabet = Alphabet::of_exprs(&exprs);
            Ok((exprs, alphabet))
        }
    }
}

fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let word: Word = text.parse()?;
    alphabet.check_word(&word)?;
    Ok(word)
}

fn one(mut exprs: Vec<Regex>) -> Regex {
    exprs.pop().expect("one expression parsed")
}

pub fn cmd_derive(expr: &str, word: &str, config: &SessionConfig) -> Result<Outcome> {
    let (exprs, alphabet) = parse_all(&[expr], config)?;
    let word = parse_word(word, &alphabet)?;
    let d = deriv_word(&word, &one(exprs));
    let is_nullable = nullable(&d);
    let stdout = match config.output_format {
        OutputFormat::Json => {
            let doc = json!({ "word": word.to_string(), "derivative": render(&d), "nullable": is_nullable });
            format!("{doc}\n")
        }
        _ => format!("{}\nnullable: {is_nullable}\n", render(&d)),
    };
    Ok(Outcome::yes(stdout))
}

pub fn cmd_match(expr: &str, word: &str, config: &SessionConfig) -> Result<Outcome> {
    let (exprs, alphabet) = parse_all(&[expr], config)?;
    let word = parse_word(word, &alphabet)?;
    let found = matches(&one(exprs), &word);
    let stdout = match config.output_format {
        OutputFormat::Json => format!("{}\n", json!({ "match": found })),
        _ => format!("{found}\n"),
    };
    Ok(Outcome::verdict(stdout, found))
}

pub fn cmd_dfa(expr: &str, config: &SessionConfig) -> Result<Outcome> {
    let (exprs, alphabet) = parse_all(&[expr], config)?;
    let dfa = build_dfa(&one(exprs), &alphabet, config.max_states)?;
    let stdout = match config.output_format {
        OutputFormat::Dot => to_dot(&dfa),
        OutputFormat::Json => format!("{}\n", to_json(&dfa)),
        OutputFormat::Text => dfa_table(&dfa),
    };
    Ok(Outcome::yes(stdout))
}

fn dfa_table(dfa: &Dfa) -> String {
    let mut out = String::new();
    for (q, state) in dfa.states().iter().enumerate() {
        let start = if q == dfa.start() { ">" } else { " " };
        let accept = if dfa.is_accepting(q) { "*" } else { " " };
        let _ = write!(out, "{start}{accept}{q}");
        for &a in dfa.alphabet() {
            let _ = write!(out, "  {a}->{}", dfa.next(q, a).expect("total table"));
        }
        let _ = writeln!(out, "  {}", render(state));
    }
    out
}

pub fn cmd_equiv(expr1: &str, expr2: &str, config: &SessionConfig) -> Result<Outcome> {
    let (exprs, alphabet) = parse_all(&[expr1, expr2], config)?;
    let verdict = equivalent(&exprs[0], &exprs[1], &alphabet, config.max_pairs)?;
    let stdout = match config.output_format {
        OutputFormat::Json => format!("{}\n", serde_json::to_string(&verdict)?),
        _ => match &verdict.counterexample {
            None => "equal\n".to_string(),
            Some(w) => format!("unequal {}\n", render(&Regex::word(w))),
        },
    };
    Ok(Outcome::verdict(stdout, verdict.equal))
}

pub fn cmd_enum(expr: &str, bound: usize, config: &SessionConfig) -> Result<Outcome> {
    let (exprs, _) = parse_all(&[expr], config)?;
    let sample = enumerate_lang_capped(&one(exprs), bound, config.enum_cap)?;
    let stdout = match config.output_format {
        OutputFormat::Json => {
            let words: Vec<String> = sample.words().iter().map(Word::to_string).collect();
            format!("{}\n", json!({ "bound": bound, "words": words }))
        }
        _ => sample.to_string(),
    };
    Ok(Outcome::yes(stdout))
}

pub fn cmd_check_identities(config: &SessionConfig) -> Result<Outcome> {
    let results = run_suite(config.max_pairs)?;
    let passed = results.iter().filter(|r| r.passed).count();
    let mut stdout = String::new();
    for r in &results {
        let _ = writeln!(
            stdout,
            "{}  {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.line
        );
    }
    let _ = writeln!(stdout, "{passed}/{} checks passed", results.len());
    Ok(Outcome::verdict(stdout, passed == results.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("derivrex").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn derive_command() {
        assert_eq!(
            run_args(&["derive", "a(a+b)*", "a"]),
            (0, "(a+b)*\nnullable: true\n".into(), String::new())
        );
        assert_eq!(
            run_args(&["derive", "(a+b)ab", "aba"]).1,
            "0\nnullable: false\n"
        );
        assert_eq!(
            run_args(&["derive", "b+a+0", ""]).1,
            "a+b\nnullable: false\n"
        );
        assert_eq!(
            run_args(&["derive", "a(a+b)*", "a", "--format", "json"]).1,
            "{\"derivative\":\"(a+b)*\",\"nullable\":true,\"word\":\"a\"}\n"
        );
    }

    #[test]
    fn match_command() {
        assert_eq!(
            run_args(&["match", "a(a+b)*", "abba"]),
            (0, "true\n".into(), String::new())
        );
        assert_eq!(run_args(&["match", "a(a+b)*", "baba"]).0, 1);
        assert_eq!(
            run_args(&["match", "0", ""]),
            (1, "false\n".into(), String::new())
        );
        assert_eq!(
            run_args(&["match", "1", ""]),
            (0, "true\n".into(), String::new())
        );
    }

    #[test]
    fn errors_exit_two() {
        let (code, out, err) = run_args(&["match", "a(b", "a"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("position 3"), "{err}");

        let (code, _, err) = run_args(&["match", "a*", "ab"]);
        assert_eq!(code, 2);
        assert!(err.contains("'b'"), "{err}");

        let (code, _, err) = run_args(&["derive", "a+c", "a", "--alphabet", "ab"]);
        assert_eq!(code, 2);
        assert!(err.contains("'c'") && err.contains("position 2"), "{err}");

        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["dfa", "a", "--max-states", "0"]).0, 2);
    }

    #[test]
    fn explicit_alphabet_widens() {
        assert_eq!(run_args(&["match", "a*", "ab", "--alphabet", "ab"]).0, 1);
        let (_, out, _) = run_args(&["dfa", "0", "--alphabet", "ab", "--format", "json"]);
        assert!(out.starts_with(r#"{"alphabet":["a","b"],"states":["0"]"#));
    }

    #[test]
    fn dfa_command() {
        let (code, out, _) = run_args(&["dfa", "(a+b)*a"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("digraph"));
        assert!(out.contains("label=\"1+(a+b)*a\""), "{out}");
        let (_, table, _) = run_args(&["dfa", "a(a+b)*", "--format", "text"]);
        assert_eq!(
            table,
            "> 0  a->1  b->2  a(a+b)*\n *1  a->1  b->1  (a+b)*\n  2  a->2  b->2  0\n"
        );
        let (code, _, err) = run_args(&["dfa", "a(a+b)*", "--max-states", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("3 states"), "{err}");
    }

    #[test]
    fn equiv_command() {
        assert_eq!(
            run_args(&["equiv", "(a+b)*", "(a*b*)*"]),
            (0, "equal\n".into(), String::new())
        );
        assert_eq!(
            run_args(&["equiv", "(a+b)*", "a*+b*"]),
            (1, "unequal ab\n".into(), String::new())
        );
        assert_eq!(run_args(&["equiv", "a*", "1+aa*"]).0, 0);
        assert_eq!(run_args(&["equiv", "a*", "a"]).1, "unequal 1\n");
        assert_eq!(
            run_args(&["equiv", "a", "b", "--format", "json"]).1,
            "{\"equal\":false,\"counterexample\":\"a\"}\n"
        );
    }

    #[test]
    fn enum_command() {
        assert_eq!(
            run_args(&["enum", "(ab)*", "--bound", "4"]),
            (0, "\nab\nabab\n".into(), String::new())
        );
        assert_eq!(run_args(&["enum", "0", "--bound", "3"]).1, "");
        assert_eq!(run_args(&["enum", "a-a", "--bound", "3"]).1, "");
        assert_eq!(
            run_args(&["enum", "(a+b)*", "--bound", "12", "--enum-cap", "50"]).0,
            2
        );
    }

    #[test]
    fn identities_command() {
        let (code, out, _) = run_args(&["check-identities"]);
        assert_eq!(code, 0, "{out}");
        assert!(
            out.lines()
                .any(|l| l.starts_with("PASS") && l.contains("1+a* = a*")),
            "{out}"
        );
        assert!(!out.contains("FAIL"));
    }
}
