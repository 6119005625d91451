//! Concrete text syntax for formulas.
//!
//! ```text
//! forall x. forall y. (x != y -> conn(x, y | z) | E(x, y))
//! exists a. exists b. !dp[(a, b), (z, z)]
//! ```
//!
//! Quantifiers bind weakest and scope as far right as possible. Among the
//! connectives `!` binds tightest, then `&`, `|` and `->`; `&` and `|`
//! associate to the left, `->` to the right. `x < y` abbreviates the binary
//! relation atom `<(x, y)` used for tree orders. The Unicode symbols
//! `∀ ∃ ∧ ∨ ¬ → ≠` are accepted on input and `#` starts a line comment. The
//! full grammar is in `docs/grammar.ebnf`.

mod lexer;
mod parser;
mod printer;
mod validate;

pub use validate::{validate_sentence, Violation};

use thiserror::Error;

use crate::logic::Formula;
use crate::structure::Signature;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: relation `{symbol}` has arity {expected}, found {found} arguments")]
    Arity {
        line: usize,
        column: usize,
        symbol: String,
        expected: usize,
        found: usize,
    },
}

impl ParseError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, column, .. } | ParseError::Arity { line, column, .. } => (*line, *column),
        }
    }
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    parser::parse_formula(text, None)
}

/// Like [`parse`], additionally rejecting relation atoms whose argument
/// count disagrees with `signature`. Symbols missing from the signature
/// are accepted.
pub fn parse_with_signature(text: &str, signature: &Signature) -> Result<Formula, ParseError> {
    parser::parse_formula(text, Some(signature))
}

/// Canonical text of `f`, with parentheses only where precedence requires
/// them. `parse(&print(f)) == Ok(f)` for every formula whose variable and
/// relation names are identifiers.
pub fn print(f: &Formula) -> String {
    printer::print_formula(f)
}
