use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::logic::{join, Formula, Var};
use crate::structure::{Signature, EDGE};

/// One problem found by [`validate_sentence`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("free variables {}", join(.0))]
    FreeVariables(BTreeSet<Var>),
    #[error("variable `{0}` is rebound inside its own scope")]
    Shadowed(Var),
    #[error("variable `{0}` occurs both free and bound")]
    FreeAndBound(Var),
    #[error("relation `{symbol}` used with arities {arities:?}")]
    InconsistentArity { symbol: String, arities: Vec<usize> },
    #[error("relation `{symbol}` has arity {expected} but is used with {found} arguments")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        found: usize,
    },
}

/// Checks that `f` is a well-formed sentence: no free variables, no
/// quantifier rebinding a variable already in scope, and relation symbols
/// used at a single arity matching `signature` (the edge relation `E` is
/// always binary). Collects every violation instead of stopping at the
/// first.
pub fn validate_sentence(f: &Formula, signature: Option<&Signature>) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    let free = f.free_variables();
    if !free.is_empty() {
        let bound = f.bound_variables();
        out.extend(free.intersection(&bound).cloned().map(Violation::FreeAndBound));
        out.push(Violation::FreeVariables(free));
    }

    let mut shadowed = BTreeSet::new();
    find_shadowing(f, &mut Vec::new(), &mut shadowed);
    out.extend(shadowed.into_iter().map(Violation::Shadowed));

    let mut declared: BTreeMap<&str, usize> = BTreeMap::from([(EDGE, 2)]);
    if let Some(sig) = signature {
        declared.extend(sig.iter().map(|(name, &arity)| (name.as_str(), arity)));
    }
    for (symbol, arities) in f.relation_uses() {
        match declared.get(symbol.as_str()) {
            Some(&expected) => out.extend(arities.into_iter().filter(|&a| a != expected).map(|found| {
                Violation::ArityMismatch {
                    symbol: symbol.clone(),
                    expected,
                    found,
                }
            })),
            None if arities.len() > 1 => out.push(Violation::InconsistentArity {
                symbol,
                arities: arities.into_iter().collect(),
            }),
            None => {}
        }
    }

    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

fn find_shadowing<'a>(f: &'a Formula, scope: &mut Vec<&'a Var>, found: &mut BTreeSet<Var>) {
    match f {
        Formula::Exists(x, body) | Formula::Forall(x, body) => {
            if scope.contains(&x) {
                found.insert(x.clone());
            }
            scope.push(x);
            find_shadowing(body, scope, found);
            scope.pop();
        }
        _ => {
            for c in f.children() {
                find_shadowing(c, scope, found);
            }
        }
    }
}
