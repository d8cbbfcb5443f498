use std::process::{Command, Output};

fn derivrex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_derivrex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn derive_prints_derivative_and_nullability() {
    let o = derivrex(&["derive", "a(a+b)*", "a"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(a+b)*\nnullable: true\n");

    let o = derivrex(&["derive", "(a+b)ab", "aba"]);
    assert_eq!(stdout(&o), "0\nnullable: false\n");

    let o = derivrex(&["derive", "(b+a)*(1a)", ""]);
    assert_eq!(stdout(&o), "(a+b)*a\nnullable: false\n");
}

#[test]
fn match_exit_status() {
    assert_eq!(
        derivrex(&["match", "a(a+b)*", "abba"]).status.code(),
        Some(0)
    );
    assert_eq!(derivrex(&["match", "a(a+b)*", "ba"]).status.code(), Some(1));
    assert_eq!(derivrex(&["match", "0", ""]).status.code(), Some(1));
    assert_eq!(derivrex(&["match", "1", ""]).status.code(), Some(0));
    let bad = derivrex(&["match", "a(+b)", "a"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("position 2"));
}

#[test]
fn dfa_output_is_deterministic() {
    let first = derivrex(&["dfa", "a(a+b)*"]);
    let second = derivrex(&["dfa", "a(a+b)*"]);
    assert_eq!(first.stdout, second.stdout);
    let dot = stdout(&first);
    assert_eq!(
        dot.lines()
            .filter(|l| l.contains("shape=doublecircle"))
            .count(),
        1
    );

    let json = stdout(&derivrex(&[
        "dfa",
        "0",
        "--alphabet",
        "ab",
        "--format",
        "json",
    ]));
    assert_eq!(
        json.trim_end(),
        r#"{"alphabet":["a","b"],"states":["0"],"start":0,"accepting":[],"transitions":[{"from":0,"symbol":"a","to":0},{"from":0,"symbol":"b","to":0}]}"#
    );
}

#[test]
fn equiv_and_enum() {
    let o = derivrex(&["equiv", "(a+b)*", "a*+b*"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "unequal ab\n");
    assert_eq!(derivrex(&["equiv", "a*", "1+aa*"]).status.code(), Some(0));

    let o = derivrex(&["enum", "(ab)*", "--bound", "4"]);
    assert_eq!(stdout(&o), "\nab\nabab\n");
}

#[test]
fn identity_suite_exits_zero() {
    let o = derivrex(&["check-identities"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("32/32 checks passed\n"));
}
