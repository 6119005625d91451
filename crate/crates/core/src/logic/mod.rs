//! Formulas of first-order logic with `conn` and `dp` atoms.

mod ast;
mod transform;

pub use ast::{Formula, Fragment, Var};
pub use transform::{comp_relativize, del_relativize, rename_bound, FreshNames};

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("deletion variable `{0}` occurs free in the formula")]
    DeletionVariableFree(Var),
    #[error("component variable `{0}` is bound in the formula")]
    ComponentVariableBound(Var),
    #[error("expected a sentence, found free variables {}", join(.0))]
    NotASentence(BTreeSet<Var>),
}

pub(crate) fn join(vars: &BTreeSet<Var>) -> String {
    vars.iter().map(String::as_str).collect::<Vec<_>>().join(", ")
}
