//! Capture-avoiding renaming and the `del(z)` / `comp(x)` relativisations.

use std::collections::{BTreeSet, HashMap};

use super::{Formula, FormulaError, Var};

/// Generator for names in the reserved namespace `_v0, _v1, ...`, skipping
/// any name registered with [`avoid`](Self::avoid).
#[derive(Debug, Clone, Default)]
pub struct FreshNames {
    used: BTreeSet<Var>,
    next: usize,
}

impl FreshNames {
    pub fn new() -> Self {
        Self::default()
    }

    /// Never hand out any variable name occurring in `f`.
    pub fn avoid(&mut self, f: &Formula) -> &mut Self {
        self.used.extend(f.all_variables());
        self
    }

    pub fn avoid_name(&mut self, name: &str) -> &mut Self {
        self.used.insert(name.to_string());
        self
    }

    pub fn fresh(&mut self) -> Var {
        loop {
            let name = format!("_v{}", self.next);
            self.next += 1;
            if self.used.insert(name.clone()) {
                return name;
            }
        }
    }
}

/// Alpha-equivalent copy of `f` in which every quantifier binds its own
/// fresh name. Free variables are left alone.
pub fn rename_bound(f: &Formula) -> Formula {
    let mut fresh = FreshNames::new();
    fresh.avoid(f);
    rename_where(f, &mut HashMap::new(), &mut fresh, &|_| true)
}

/// Renames binders selected by `pick`, substituting in their scope.
fn rename_where(
    f: &Formula,
    env: &mut HashMap<Var, Var>,
    fresh: &mut FreshNames,
    pick: &dyn Fn(&str) -> bool,
) -> Formula {
    let sub = |v: &Var, env: &HashMap<Var, Var>| env.get(v).cloned().unwrap_or_else(|| v.clone());
    match f {
        Formula::Equals(x, y) => Formula::Equals(sub(x, env), sub(y, env)),
        Formula::Rel(r, args) => Formula::Rel(r.clone(), args.iter().map(|a| sub(a, env)).collect()),
        Formula::Conn { x, y, deleted } => Formula::Conn {
            x: sub(x, env),
            y: sub(y, env),
            deleted: deleted.iter().map(|z| sub(z, env)).collect(),
        },
        Formula::Dp(pairs) => Formula::Dp(pairs.iter().map(|(a, b)| (sub(a, env), sub(b, env))).collect()),
        Formula::Not(a) => rename_where(a, env, fresh, pick).negate(),
        Formula::And(a, b) => rename_where(a, env, fresh, pick).and(rename_where(b, env, fresh, pick)),
        Formula::Or(a, b) => rename_where(a, env, fresh, pick).or(rename_where(b, env, fresh, pick)),
        Formula::Implies(a, b) => {
            rename_where(a, env, fresh, pick).implies(rename_where(b, env, fresh, pick))
        }
        Formula::Exists(x, body) | Formula::Forall(x, body) => {
            let new = if pick(x) { fresh.fresh() } else { x.clone() };
            let saved = env.insert(x.clone(), new.clone());
            let body = rename_where(body, env, fresh, pick);
            match saved {
                Some(old) => env.insert(x.clone(), old),
                None => env.remove(x),
            };
            if matches!(f, Formula::Exists(..)) {
                Formula::exists(new, body)
            } else {
                Formula::forall(new, body)
            }
        }
    }
}

/// `del(z)[f]`: the formula that holds in a structure exactly when `f`
/// holds after the element assigned to `z` is deleted.
///
/// Quantifiers get the guard `x != z`, `conn` atoms gain `z` as an extra
/// deletion, and `dp` atoms gain the trivial pair `(z, z)` together with
/// guards `z != x_i`, `z != y_i` on their endpoints. Binders that happen to
/// be named `z` are renamed first.
pub fn del_relativize(z: &str, f: &Formula) -> Result<Formula, FormulaError> {
    if f.free_variables().contains(z) {
        return Err(FormulaError::DeletionVariableFree(z.to_string()));
    }
    let f = if f.bound_variables().contains(z) {
        let mut fresh = FreshNames::new();
        fresh.avoid(f).avoid_name(z);
        rename_where(f, &mut HashMap::new(), &mut fresh, &|x| x == z)
    } else {
        f.clone()
    };
    Ok(del(z, &f))
}

fn del(z: &str, f: &Formula) -> Formula {
    match f {
        Formula::Equals(..) | Formula::Rel(..) => f.clone(),
        Formula::Conn { x, y, deleted } => {
            let mut deleted = deleted.clone();
            deleted.push(z.to_string());
            Formula::Conn {
                x: x.clone(),
                y: y.clone(),
                deleted,
            }
        }
        Formula::Dp(pairs) => {
            let mut extended = pairs.clone();
            extended.push((z.to_string(), z.to_string()));
            let mut endpoints: Vec<&Var> = Vec::new();
            for v in pairs.iter().flat_map(|(a, b)| [a, b]) {
                if !endpoints.contains(&v) {
                    endpoints.push(v);
                }
            }
            let guards = endpoints.into_iter().map(|v| Formula::neq(z, v.clone()));
            Formula::conjunction(std::iter::once(Formula::Dp(extended)).chain(guards)).unwrap()
        }
        Formula::Not(a) => del(z, a).negate(),
        Formula::And(a, b) => del(z, a).and(del(z, b)),
        Formula::Or(a, b) => del(z, a).or(del(z, b)),
        Formula::Implies(a, b) => del(z, a).implies(del(z, b)),
        Formula::Exists(x, body) => Formula::exists(x.clone(), Formula::neq(x.clone(), z).and(del(z, body))),
        Formula::Forall(x, body) => {
            Formula::forall(x.clone(), Formula::neq(x.clone(), z).implies(del(z, body)))
        }
    }
}

/// `f^[comp(x)]`: every quantifier restricted to the connected component
/// of `x` via a `conn(x, y |)` guard.
pub fn comp_relativize(x: &str, f: &Formula) -> Result<Formula, FormulaError> {
    if f.bound_variables().contains(x) {
        return Err(FormulaError::ComponentVariableBound(x.to_string()));
    }
    Ok(comp(x, f))
}

fn comp(x: &str, f: &Formula) -> Formula {
    let guard = |y: &Var| Formula::conn(x, y.clone(), Vec::<Var>::new());
    match f {
        _ if f.is_atom() => f.clone(),
        Formula::Not(a) => comp(x, a).negate(),
        Formula::And(a, b) => comp(x, a).and(comp(x, b)),
        Formula::Or(a, b) => comp(x, a).or(comp(x, b)),
        Formula::Implies(a, b) => comp(x, a).implies(comp(x, b)),
        Formula::Exists(y, body) => Formula::exists(y.clone(), guard(y).and(comp(x, body))),
        Formula::Forall(y, body) => Formula::forall(y.clone(), guard(y).implies(comp(x, body))),
        _ => unreachable!(),
    }
}
