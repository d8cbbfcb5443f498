//! Regular expressions whose matching, automaton construction and
//! equivalence checking all run on Brzozowski derivatives.
//!
//! ```
//! use derivrex::{derivative, syntax::{Regex, Symbol}};
//!
//! let e: Regex = "(a+b)*a".parse().unwrap();
//! let a = Symbol::new('a').unwrap();
//! assert_eq!(derivative::deriv_sym(a, &e).to_string(), "1+(a+b)*a");
//! ```

pub mod automaton;
pub mod cli;
pub mod derivative;
pub mod error;
pub mod oracle;
pub mod syntax;

pub use error::{Error, Result};
