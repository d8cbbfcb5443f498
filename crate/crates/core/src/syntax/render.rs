use super::Regex;

// Binding strength, loosest first.
const UNION: u8 = 0;
const DIFF: u8 = 1;
const INTERSECT: u8 = 2;
const CONCAT: u8 = 3;
const STAR: u8 = 4;
const ATOM: u8 = 5;

/// Prints a term in the text syntax, with the fewest parentheses that still
/// re-parse to the same tree.
pub fn render(e: &Regex) -> String {
    let mut out = String::new();
    write_term(e, 0, &mut out);
    out
}

fn level(e: &Regex) -> u8 {
    match e {
        Regex::Empty | Regex::Epsilon | Regex::Sym(_) => ATOM,
        Regex::Star(_) => STAR,
        Regex::Concat(..) => CONCAT,
        Regex::Intersect(..) => INTERSECT,
        Regex::Diff(..) => DIFF,
        Regex::Union(..) => UNION,
    }
}

fn write_term(e: &Regex, min: u8, out: &mut String) {
    let paren = level(e) < min;
    if paren {
        out.push('(');
    }
    match e {
        Regex::Empty => out.push('0'),
        Regex::Epsilon => out.push('1'),
        Regex::Sym(s) => out.push(s.as_char()),
        Regex::Star(x) => {
            write_term(x, STAR, out);
            out.push('*');
        }
        // right-associative
        Regex::Concat(l, r) => {
            write_term(l, CONCAT + 1, out);
            write_term(r, CONCAT, out);
        }
        Regex::Intersect(l, r) => write_left_assoc(l, r, '&', INTERSECT, out),
        Regex::Diff(l, r) => write_left_assoc(l, r, '-', DIFF, out),
        Regex::Union(l, r) => write_left_assoc(l, r, '+', UNION, out),
    }
    if paren {
        out.push(')');
    }
}

fn write_left_assoc(l: &Regex, r: &Regex, op: char, prec: u8, out: &mut String) {
    write_term(l, prec, out);
    out.push(op);
    write_term(r, prec + 1, out);
}
