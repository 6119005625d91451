use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type Var = String;

/// First-order formulas over a relational signature, extended with
/// `conn` atoms (connectivity after deleting `deleted`) and `dp` atoms
/// (internally vertex-disjoint paths for every pair).
///
/// A `Conn` atom with `k` deletion variables is the `(k + 2)`-ary symbol
/// `conn_k`; a `Dp` atom with `k >= 1` pairs is the `2k`-ary symbol `dp_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Equals(Var, Var),
    Rel(String, Vec<Var>),
    Conn { x: Var, y: Var, deleted: Vec<Var> },
    Dp(Vec<(Var, Var)>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(Var, Box<Formula>),
    Forall(Var, Box<Formula>),
}

impl Formula {
    pub fn eq(x: impl Into<Var>, y: impl Into<Var>) -> Formula {
        Formula::Equals(x.into(), y.into())
    }

    /// `!(x = y)`
    pub fn neq(x: impl Into<Var>, y: impl Into<Var>) -> Formula {
        Formula::eq(x, y).negate()
    }

    pub fn rel<S: Into<Var>>(name: impl Into<String>, args: impl IntoIterator<Item = S>) -> Formula {
        Formula::Rel(name.into(), args.into_iter().map(Into::into).collect())
    }

    pub fn edge(x: impl Into<Var>, y: impl Into<Var>) -> Formula {
        Formula::Rel("E".into(), vec![x.into(), y.into()])
    }

    pub fn conn<S: Into<Var>>(
        x: impl Into<Var>,
        y: impl Into<Var>,
        deleted: impl IntoIterator<Item = S>,
    ) -> Formula {
        Formula::Conn {
            x: x.into(),
            y: y.into(),
            deleted: deleted.into_iter().map(Into::into).collect(),
        }
    }

    /// Panics on an empty pair list; `dp` atoms have at least one pair.
    pub fn dp<S: Into<Var>, T: Into<Var>>(pairs: impl IntoIterator<Item = (S, T)>) -> Formula {
        let pairs: Vec<(Var, Var)> = pairs.into_iter().map(|(a, b)| (a.into(), b.into())).collect();
        assert!(!pairs.is_empty(), "dp atom needs at least one pair");
        Formula::Dp(pairs)
    }

    pub fn negate(self) -> Formula {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Formula {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Formula) -> Formula {
        Formula::Implies(Box::new(self), Box::new(other))
    }

    pub fn exists(x: impl Into<Var>, body: Formula) -> Formula {
        Formula::Exists(x.into(), Box::new(body))
    }

    pub fn forall(x: impl Into<Var>, body: Formula) -> Formula {
        Formula::Forall(x.into(), Box::new(body))
    }

    /// Prefixes `∃x1 ... ∃xn`, with `x1` outermost.
    pub fn exists_all<S: Into<Var>>(vars: impl IntoIterator<Item = S>, body: Formula) -> Formula {
        let vars: Vec<Var> = vars.into_iter().map(Into::into).collect();
        vars.into_iter().rev().fold(body, |acc, v| Formula::exists(v, acc))
    }

    pub fn forall_all<S: Into<Var>>(vars: impl IntoIterator<Item = S>, body: Formula) -> Formula {
        let vars: Vec<Var> = vars.into_iter().map(Into::into).collect();
        vars.into_iter().rev().fold(body, |acc, v| Formula::forall(v, acc))
    }

    /// Left-nested conjunction, `None` for an empty iterator.
    pub fn conjunction(parts: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        parts.into_iter().reduce(Formula::and)
    }

    pub fn disjunction(parts: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        parts.into_iter().reduce(Formula::or)
    }

    pub fn is_atom(&self) -> bool {
        matches!(
            self,
            Formula::Equals(..) | Formula::Rel(..) | Formula::Conn { .. } | Formula::Dp(_)
        )
    }

    /// Immediate subformulas.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Not(f) | Formula::Exists(_, f) | Formula::Forall(_, f) => vec![f],
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => vec![a, b],
            _ => Vec::new(),
        }
    }

    /// Variables occurring in an atom, in order.
    pub fn atom_vars(&self) -> Vec<&Var> {
        match self {
            Formula::Equals(x, y) => vec![x, y],
            Formula::Rel(_, args) => args.iter().collect(),
            Formula::Conn { x, y, deleted } => [x, y].into_iter().chain(deleted).collect(),
            Formula::Dp(pairs) => pairs.iter().flat_map(|(a, b)| [a, b]).collect(),
            _ => Vec::new(),
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Formula::size).sum::<usize>()
    }

    /// Maximum nesting depth of quantifiers.
    pub fn quantifier_rank(&self) -> usize {
        match self {
            Formula::Exists(_, f) | Formula::Forall(_, f) => 1 + f.quantifier_rank(),
            _ => self
                .children()
                .into_iter()
                .map(Formula::quantifier_rank)
                .max()
                .unwrap_or(0),
        }
    }

    pub fn free_variables(&self) -> BTreeSet<Var> {
        match self {
            Formula::Exists(x, f) | Formula::Forall(x, f) => {
                let mut vars = f.free_variables();
                vars.remove(x);
                vars
            }
            f if f.is_atom() => f.atom_vars().into_iter().cloned().collect(),
            f => f
                .children()
                .into_iter()
                .flat_map(Formula::free_variables)
                .collect(),
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_variables().is_empty()
    }

    /// Variables bound by some quantifier.
    pub fn bound_variables(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Exists(x, _) | Formula::Forall(x, _) = f {
                out.insert(x.clone());
            }
        });
        out
    }

    /// Every variable name mentioned anywhere.
    pub fn all_variables(&self) -> BTreeSet<Var> {
        let mut out = self.bound_variables();
        self.visit(&mut |f| out.extend(f.atom_vars().into_iter().cloned()));
        out
    }

    /// Pre-order traversal.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Formula)) {
        f(self);
        for c in self.children() {
            c.visit(f);
        }
    }

    /// Relation symbols with every arity they are used at.
    pub fn relation_uses(&self) -> BTreeMap<String, BTreeSet<usize>> {
        let mut out: BTreeMap<String, BTreeSet<usize>> = BTreeMap::new();
        self.visit(&mut |f| {
            if let Formula::Rel(name, args) = f {
                out.entry(name.clone()).or_default().insert(args.len());
            }
        });
        out
    }

    /// Least fragment containing the formula. With both kinds of atoms the
    /// formula is placed in `FO+DP(k)`, counting `conn_j` as `dp_{j+1}`.
    pub fn fragment(&self) -> Fragment {
        let mut conn: Option<usize> = None;
        let mut dp: Option<usize> = None;
        self.visit(&mut |f| match f {
            Formula::Conn { deleted, .. } => conn = conn.max(Some(deleted.len())),
            Formula::Dp(pairs) => dp = dp.max(Some(pairs.len())),
            _ => {}
        });
        match (conn, dp) {
            (None, None) => Fragment::Fo,
            (Some(k), None) => Fragment::Conn(k),
            (c, Some(k)) => Fragment::Dp(k.max(c.map_or(0, |c| c + 1))),
        }
    }
}

/// Syntactic fragments `FO ⊆ FO+conn(0) ⊆ FO+conn(1) ⊆ ...` and
/// `FO+conn(k) ⊆ FO+DP(k + 1)`, `FO+DP(k) ⊆ FO+DP(k + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fragment {
    Fo,
    Conn(usize),
    Dp(usize),
}

impl PartialOrd for Fragment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        use Fragment::*;
        let le = |a: &Fragment, b: &Fragment| match (a, b) {
            (Fo, _) => true,
            (Conn(i), Conn(j)) => i <= j,
            (Conn(i), Dp(j)) => i < j,
            (Dp(i), Dp(j)) => i <= j,
            _ => false,
        };
        match (le(self, other), le(other, self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fragment::Fo => write!(f, "FO"),
            Fragment::Conn(k) => write!(f, "FO+conn({k})"),
            Fragment::Dp(k) => write!(f, "FO+DP({k})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn acyclic_witness() -> Formula {
        Formula::exists_all(
            ["x", "y"],
            Formula::edge("x", "y").and(Formula::exists(
                "z",
                Formula::conn("z", "x", ["y"]).and(Formula::conn("z", "y", ["x"])),
            )),
        )
    }

    #[test]
    fn quantifier_rank() {
        assert_eq!(Formula::edge("x", "y").quantifier_rank(), 0);
        assert_eq!(acyclic_witness().quantifier_rank(), 3);
        let f = Formula::exists("x", Formula::edge("x", "x")).and(Formula::forall_all(
            ["a", "b"],
            Formula::eq("a", "b"),
        ));
        assert_eq!(f.quantifier_rank(), 2);
    }

    #[test]
    fn free_variables() {
        let vars = |f: &Formula| f.free_variables().into_iter().collect::<Vec<_>>();
        assert_eq!(vars(&Formula::conn("x", "y", ["z"])), ["x", "y", "z"]);
        assert_eq!(vars(&Formula::exists("x", Formula::edge("x", "y"))), ["y"]);
        assert!(acyclic_witness().is_sentence());
        // a variable can be free and bound at once
        let f = Formula::edge("x", "y").and(Formula::exists("x", Formula::eq("x", "x")));
        assert_eq!(vars(&f), ["x", "y"]);
    }

    #[test]
    fn fragments() {
        let conn0 = Formula::forall_all(["x", "y"], Formula::conn("x", "y", Vec::<Var>::new()));
        assert_eq!(conn0.fragment(), Fragment::Conn(0));
        assert_eq!(Formula::edge("x", "y").fragment(), Fragment::Fo);
        let dp2 = Formula::dp([("x", "y"), ("u", "v")]);
        assert_eq!(dp2.fragment(), Fragment::Dp(2));
        let mixed = Formula::dp([("x", "y")]).and(Formula::conn("x", "y", ["z", "w"]));
        assert_eq!(mixed.fragment(), Fragment::Dp(3));
        assert_eq!(acyclic_witness().fragment(), Fragment::Conn(1));
    }

    #[test]
    fn fragment_order() {
        use Fragment::*;
        assert!(Fo < Conn(0));
        assert!(Conn(0) < Conn(2));
        assert!(Conn(1) < Dp(2));
        assert!(Conn(1) <= Dp(2));
        assert_eq!(Conn(2).partial_cmp(&Dp(2)), None);
        assert!(Dp(1) < Dp(3));
        assert_eq!(Dp(1).partial_cmp(&Conn(5)), None);
    }
}
