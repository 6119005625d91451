//! Model checking for `FO+conn` and `FO+DP` over relational structures.
//!
//! A formula is compiled once per call: every binder gets its own slot, so
//! shadowing costs nothing at run time. Maximal chains of like quantifiers
//! `∃x1 ... ∃xm φ` are searched as one block. The body is split into
//! conjuncts (for `∀` blocks, the conjuncts of `¬φ`), and each conjunct is
//! checked as soon as the block variables it mentions are assigned, so
//! guards such as `x != y` or `conn(x, y |)` prune the search early.
//!
//! Block results are memoised on the values of the block's free variables.
//! `dp` atoms are cached per evaluator on their normalised vertex pairs.
//!
//! Running time is `O(n^qr · |φ| · atom cost)`; see [`estimated_cost`].

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::graph::{disjoint_paths_unchecked, Vertex};
use crate::logic::{join, Formula, Var};
use crate::structure::{Relation, RelationalStructure, EDGE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variables: {}", join(.0))]
    UnboundVariables(BTreeSet<Var>),
    #[error("relation `{0}` does not occur in the structure")]
    UnknownRelation(String),
    #[error("relation `{symbol}` has arity {expected} but is used with {found} arguments")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("variable `{var}` is assigned {element}, outside the universe of size {size}")]
    ElementOutOfRange { var: Var, element: usize, size: usize },
}

/// A partial map from variables to universe elements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<Var, Vertex>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: impl Into<Var>, element: Vertex) -> Self {
        self.0.insert(var.into(), element);
        self
    }

    pub fn insert(&mut self, var: impl Into<Var>, element: Vertex) -> Option<Vertex> {
        self.0.insert(var.into(), element)
    }

    pub fn remove(&mut self, var: &str) -> Option<Vertex> {
        self.0.remove(var)
    }

    pub fn get(&self, var: &str) -> Option<Vertex> {
        self.0.get(var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, Vertex)> {
        self.0.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<S: Into<Var>> FromIterator<(S, Vertex)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (S, Vertex)>>(iter: I) -> Self {
        Assignment(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

/// `(s, a) ⊨ f`. One-shot wrapper around [`Evaluator`].
pub fn evaluate(s: &RelationalStructure, f: &Formula, a: &Assignment) -> Result<bool, EvalError> {
    Evaluator::new(s).evaluate(f, a)
}

/// `s ⊨ f` for a sentence `f`.
pub fn evaluate_sentence(s: &RelationalStructure, f: &Formula) -> Result<bool, EvalError> {
    Evaluator::new(s).evaluate_sentence(f)
}

/// Rough number of elementary steps for evaluating `f` on `s`:
/// `n^qr · |f|`, times `n + m` when `conn` or `dp` atoms occur.
pub fn estimated_cost(s: &RelationalStructure, f: &Formula) -> f64 {
    let n = s.size() as f64;
    let mut cost = n.powi(f.quantifier_rank() as i32) * f.size() as f64;
    if f.fragment() != crate::logic::Fragment::Fo {
        cost *= n + s.graph().edge_count() as f64;
    }
    cost
}

/// Model checker bound to one structure. Keeps a cache of `dp` atom
/// results across calls.
pub struct Evaluator<'s> {
    s: &'s RelationalStructure,
    dp_cache: HashMap<Vec<(Vertex, Vertex)>, bool>,
}

impl<'s> Evaluator<'s> {
    pub fn new(s: &'s RelationalStructure) -> Self {
        Evaluator {
            s,
            dp_cache: HashMap::new(),
        }
    }

    pub fn structure(&self) -> &'s RelationalStructure {
        self.s
    }

    pub fn evaluate_sentence(&mut self, f: &Formula) -> Result<bool, EvalError> {
        self.evaluate(f, &Assignment::new())
    }

    pub fn evaluate(&mut self, f: &Formula, a: &Assignment) -> Result<bool, EvalError> {
        let unbound: BTreeSet<Var> = f
            .free_variables()
            .into_iter()
            .filter(|v| a.get(v).is_none())
            .collect();
        if !unbound.is_empty() {
            return Err(EvalError::UnboundVariables(unbound));
        }
        let size = self.s.size();
        let mut compiler = Compiler {
            s: self.s,
            nodes: Vec::new(),
            slots: 0,
            scope: HashMap::new(),
        };
        let mut env = Vec::new();
        for var in f.free_variables() {
            let element = a.get(&var).unwrap();
            if element >= size {
                return Err(EvalError::ElementOutOfRange { var, element, size });
            }
            compiler.scope.insert(var, vec![compiler.slots]);
            compiler.slots += 1;
            env.push(element);
        }
        let root = compiler.compile(f)?;
        env.resize(compiler.slots, 0);
        let mut run = Run {
            s: self.s,
            nodes: &compiler.nodes,
            env,
            memo: HashMap::new(),
            dp_cache: &mut self.dp_cache,
            scratch: Vec::new(),
        };
        Ok(run.eval(root))
    }
}

type Slot = usize;
type Id = usize;

const MEMO_LIMIT: usize = 1 << 22;
const DP_CACHE_LIMIT: usize = 1 << 20;

enum Node<'s> {
    Eq(Slot, Slot),
    Edge(Slot, Slot),
    Rel(&'s Relation, Vec<Slot>),
    Conn(Slot, Slot, Vec<Slot>),
    Dp(Vec<(Slot, Slot)>),
    Not(Id),
    And(Id, Id),
    Or(Id, Id),
    Implies(Id, Id),
    /// `∃vars ⋀ conjuncts`, negated when `universal`. Conjunct `(id, want,
    /// level)` must evaluate to `want` and is checked once `vars[..level]`
    /// are assigned.
    Block {
        universal: bool,
        vars: Vec<Slot>,
        conjuncts: Vec<(Id, bool, usize)>,
        free: Vec<Slot>,
    },
}

struct Compiler<'s> {
    s: &'s RelationalStructure,
    nodes: Vec<Node<'s>>,
    slots: usize,
    scope: HashMap<Var, Vec<Slot>>,
}

impl<'s> Compiler<'s> {
    fn slot(&self, v: &Var) -> Slot {
        *self.scope[v].last().unwrap()
    }

    fn push(&mut self, node: Node<'s>) -> Id {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    fn compile(&mut self, f: &Formula) -> Result<Id, EvalError> {
        let node = match f {
            Formula::Equals(x, y) => Node::Eq(self.slot(x), self.slot(y)),
            Formula::Rel(name, args) => {
                let rel = self
                    .s
                    .relation(name)
                    .ok_or_else(|| EvalError::UnknownRelation(name.clone()))?;
                if rel.arity != args.len() {
                    return Err(EvalError::ArityMismatch {
                        symbol: name.clone(),
                        expected: rel.arity,
                        found: args.len(),
                    });
                }
                if name == EDGE {
                    Node::Edge(self.slot(&args[0]), self.slot(&args[1]))
                } else {
                    Node::Rel(rel, args.iter().map(|a| self.slot(a)).collect())
                }
            }
            Formula::Conn { x, y, deleted } => Node::Conn(
                self.slot(x),
                self.slot(y),
                deleted.iter().map(|z| self.slot(z)).collect(),
            ),
            Formula::Dp(pairs) => Node::Dp(pairs.iter().map(|(a, b)| (self.slot(a), self.slot(b))).collect()),
            Formula::Not(a) => Node::Not(self.compile(a)?),
            Formula::And(a, b) => Node::And(self.compile(a)?, self.compile(b)?),
            Formula::Or(a, b) => Node::Or(self.compile(a)?, self.compile(b)?),
            Formula::Implies(a, b) => Node::Implies(self.compile(a)?, self.compile(b)?),
            Formula::Exists(..) | Formula::Forall(..) => return self.block(f),
        };
        Ok(self.push(node))
    }

    fn block(&mut self, f: &Formula) -> Result<Id, EvalError> {
        let universal = matches!(f, Formula::Forall(..));
        let mut names = Vec::new();
        let mut body = f;
        while let (Formula::Exists(x, b), false) | (Formula::Forall(x, b), true) = (body, universal) {
            names.push(x);
            body = b;
        }
        let mut vars = Vec::new();
        for x in &names {
            vars.push(self.slots);
            self.scope.entry((*x).clone()).or_default().push(self.slots);
            self.slots += 1;
        }
        let mut parts = Vec::new();
        flatten(body, !universal, &mut parts);
        let mut conjuncts = Vec::new();
        for (part, want) in parts {
            let used = self.free_slots(part);
            let level = vars
                .iter()
                .rposition(|v| used.contains(v))
                .map_or(0, |i| i + 1);
            let cost = cost_class(part);
            conjuncts.push((self.compile(part)?, want, level, cost));
            if let (Formula::Dp(pairs), true) = (part, want) {
                self.dp_prefixes(pairs, &vars, level, &mut conjuncts);
            }
        }
        conjuncts.sort_by_key(|&(_, _, level, cost)| (level, cost));
        for x in &names {
            self.scope.get_mut(*x).unwrap().pop();
        }
        let mut free: BTreeSet<Slot> = BTreeSet::new();
        for x in f.free_variables() {
            free.insert(self.slot(&x));
        }
        Ok(self.push(Node::Block {
            universal,
            vars,
            conjuncts: conjuncts.into_iter().map(|(id, want, level, _)| (id, want, level)).collect(),
            free: free.into_iter().collect(),
        }))
    }

    /// A true `dp` atom stays true when pairs are dropped, so the pairs
    /// already assigned at an earlier level can be checked there.
    fn dp_prefixes(
        &mut self,
        pairs: &[(Var, Var)],
        vars: &[Slot],
        level: usize,
        conjuncts: &mut Vec<(Id, bool, usize, u8)>,
    ) {
        let slots: Vec<(Slot, Slot)> = pairs.iter().map(|(a, b)| (self.slot(a), self.slot(b))).collect();
        let ready = |slot: Slot, l: usize| vars[l..].iter().all(|&v| v != slot);
        let mut last = 0;
        for l in 1..level {
            let prefix: Vec<(Slot, Slot)> = slots
                .iter()
                .copied()
                .filter(|&(a, b)| ready(a, l) && ready(b, l))
                .collect();
            if prefix.len() > last && prefix.len() < slots.len() {
                last = prefix.len();
                let id = self.push(Node::Dp(prefix));
                conjuncts.push((id, true, l, 2));
            }
        }
    }

    fn free_slots(&self, f: &Formula) -> BTreeSet<Slot> {
        f.free_variables().iter().map(|v| self.slot(v)).collect()
    }
}

/// Splits `f` (or `¬f` when `!positive`) into conjuncts `(g, want)` with
/// `f ≡ ⋀ (g = want)`.
fn flatten<'f>(f: &'f Formula, positive: bool, out: &mut Vec<(&'f Formula, bool)>) {
    match (f, positive) {
        (Formula::And(a, b), true) => {
            flatten(a, true, out);
            flatten(b, true, out);
        }
        (Formula::Or(a, b), false) => {
            flatten(a, false, out);
            flatten(b, false, out);
        }
        (Formula::Implies(a, b), false) => {
            flatten(a, true, out);
            flatten(b, false, out);
        }
        (Formula::Not(a), _) => flatten(a, !positive, out),
        _ => out.push((f, positive)),
    }
}

fn cost_class(f: &Formula) -> u8 {
    match f {
        Formula::Equals(..) | Formula::Rel(..) => 0,
        Formula::Conn { .. } => 1,
        Formula::Dp(_) => 2,
        _ if f.quantifier_rank() == 0 => 3,
        _ => 4,
    }
}

struct Run<'a, 's> {
    s: &'s RelationalStructure,
    nodes: &'a [Node<'s>],
    env: Vec<Vertex>,
    memo: HashMap<(Id, u128), bool>,
    dp_cache: &'a mut HashMap<Vec<(Vertex, Vertex)>, bool>,
    scratch: Vec<Vertex>,
}

impl Run<'_, '_> {
    fn eval(&mut self, id: Id) -> bool {
        let nodes = self.nodes;
        match &nodes[id] {
            Node::Eq(x, y) => self.env[*x] == self.env[*y],
            Node::Edge(x, y) => self.s.graph().has_edge(self.env[*x], self.env[*y]),
            Node::Rel(rel, args) => {
                self.scratch.clear();
                self.scratch.extend(args.iter().map(|&a| self.env[a]));
                rel.tuples.contains(self.scratch.as_slice())
            }
            Node::Conn(x, y, deleted) => {
                self.scratch.clear();
                self.scratch.extend(deleted.iter().map(|&z| self.env[z]));
                self.s
                    .graph()
                    .conn_unchecked(self.env[*x], self.env[*y], &self.scratch)
            }
            Node::Dp(pairs) => {
                let mut key: Vec<(Vertex, Vertex)> = pairs
                    .iter()
                    .map(|&(a, b)| {
                        let (a, b) = (self.env[a], self.env[b]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                key.sort_unstable();
                if let Some(&hit) = self.dp_cache.get(&key) {
                    return hit;
                }
                let result = disjoint_paths_unchecked(self.s.graph(), &key);
                if self.dp_cache.len() < DP_CACHE_LIMIT {
                    self.dp_cache.insert(key, result);
                }
                result
            }
            Node::Not(a) => !self.eval(*a),
            Node::And(a, b) => self.eval(*a) && self.eval(*b),
            Node::Or(a, b) => self.eval(*a) || self.eval(*b),
            Node::Implies(a, b) => !self.eval(*a) || self.eval(*b),
            Node::Block {
                universal,
                vars,
                conjuncts,
                free,
            } => {
                let key = self.memo_key(free).map(|k| (id, k));
                if let Some(hit) = key.and_then(|k| self.memo.get(&k)) {
                    return *hit;
                }
                let found = self.search(vars, conjuncts, 0, 0);
                let result = found != *universal;
                if let Some(k) = key {
                    if self.memo.len() < MEMO_LIMIT {
                        self.memo.insert(k, result);
                    }
                }
                result
            }
        }
    }

    fn memo_key(&self, free: &[Slot]) -> Option<u128> {
        let n = self.s.size() as u128;
        let mut key: u128 = 0;
        for &slot in free {
            key = key.checked_mul(n)?.checked_add(self.env[slot] as u128)?;
        }
        Some(key)
    }

    /// Whether `vars[depth..]` can be assigned so every conjunct holds.
    /// `next` indexes the first conjunct not yet checked.
    fn search(&mut self, vars: &[Slot], conjuncts: &[(Id, bool, usize)], depth: usize, mut next: usize) -> bool {
        while next < conjuncts.len() && conjuncts[next].2 == depth {
            let (id, want, _) = conjuncts[next];
            if self.eval(id) != want {
                return false;
            }
            next += 1;
        }
        if depth == vars.len() {
            return true;
        }
        for element in 0..self.s.size() {
            self.env[vars[depth]] = element;
            if self.search(vars, conjuncts, depth + 1, next) {
                return true;
            }
        }
        false
    }
}
