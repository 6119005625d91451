//! Seeded random graphs, rooted trees and formulas.
//!
//! Everything takes an explicit `Rng`; [`rng`] builds the reproducible
//! generator used by the tests and the command line.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Graph, Vertex};
use crate::logic::{Formula, Fragment, Var};
use crate::structure::{Relation, RelationalStructure, Signature};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A tree with a distinguished root and parent pointers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub graph: Graph,
    pub root: Vertex,
    pub parent: Vec<Option<Vertex>>,
}

impl RootedTree {
    /// Builds the rooted tree from parent pointers; exactly one vertex has
    /// no parent.
    pub fn from_parents(parent: Vec<Option<Vertex>>) -> RootedTree {
        let mut graph = Graph::empty(parent.len());
        let mut root = None;
        for (v, p) in parent.iter().enumerate() {
            match p {
                Some(p) => graph.add_edge(v, *p),
                None => {
                    assert!(root.is_none(), "two roots");
                    root = Some(v);
                }
            }
        }
        RootedTree {
            graph,
            root: root.expect("no root"),
            parent,
        }
    }

    /// `x` is a proper ancestor of `y`, by walking up from `y`.
    pub fn is_ancestor(&self, x: Vertex, y: Vertex) -> bool {
        let mut cur = self.parent[y];
        while let Some(p) = cur {
            if p == x {
                return true;
            }
            cur = self.parent[p];
        }
        false
    }

    /// The structure with edge relation `E`, unary `R = {root}` and the
    /// binary proper-ancestor relation `<`.
    pub fn structure(&self) -> RelationalStructure {
        let n = self.graph.n();
        let mut order = BTreeSet::new();
        for x in 0..n {
            for y in 0..n {
                if self.is_ancestor(x, y) {
                    order.insert(vec![x, y]);
                }
            }
        }
        let extra = BTreeMap::from([
            (
                "R".to_string(),
                Relation {
                    arity: 1,
                    tuples: BTreeSet::from([vec![self.root]]),
                },
            ),
            (
                "<".to_string(),
                Relation {
                    arity: 2,
                    tuples: order,
                },
            ),
        ]);
        RelationalStructure::from_graph_with(&self.graph, extra).expect("tree structure is valid")
    }
}

/// Random recursive tree on `n >= 1` vertices under a random labelling,
/// so the root is a uniformly random vertex.
pub fn random_rooted_tree(rng: &mut impl Rng, n: usize) -> RootedTree {
    assert!(n >= 1);
    let mut label: Vec<Vertex> = (0..n).collect();
    label.shuffle(rng);
    let mut parent = vec![None; n];
    for i in 1..n {
        parent[label[i]] = Some(label[rng.gen_range(0..i)]);
    }
    RootedTree::from_parents(parent)
}

/// Shape of the formulas drawn by [`random_sentence`].
#[derive(Debug, Clone)]
pub struct SentenceSpec {
    pub max_qr: usize,
    /// Connective nesting allowed between quantifiers.
    pub depth: usize,
    /// `Fo`, `Conn(k)` for `conn` atoms with at most `k` deletions, or
    /// `Dp(k)` for `dp` atoms with `1..=k` pairs.
    pub fragment: Fragment,
    pub signature: Signature,
    /// Variables that may occur free, e.g. names for pinned elements.
    pub free: Vec<Var>,
}

impl SentenceSpec {
    pub fn new(max_qr: usize, fragment: Fragment, signature: Signature) -> Self {
        SentenceSpec {
            max_qr,
            depth: 3,
            fragment,
            signature,
            free: Vec::new(),
        }
    }
}

/// Random formula of quantifier rank at most `spec.max_qr` whose free
/// variables are among `spec.free`. Bound variables are named `x0, x1,
/// ...` by nesting depth, so there is no shadowing.
pub fn random_sentence(rng: &mut impl Rng, spec: &SentenceSpec) -> Formula {
    assert!(
        spec.max_qr > 0 || !spec.free.is_empty(),
        "a formula needs a variable"
    );
    let mut scope = spec.free.clone();
    gen_sentence(rng, spec, spec.max_qr, spec.depth, &mut scope, 0)
}

fn gen_sentence<R: Rng>(
    rng: &mut R,
    spec: &SentenceSpec,
    rank: usize,
    depth: usize,
    scope: &mut Vec<Var>,
    bound: usize,
) -> Formula {
    let roll = rng.gen_range(0..10);
    if scope.is_empty() || (rank > 0 && (roll < 4 || (depth == 0 && roll < 7))) {
        let x = format!("x{bound}");
        scope.push(x.clone());
        let body = gen_sentence(rng, spec, rank - 1, spec.depth, scope, bound + 1);
        scope.pop();
        return if rng.gen_bool(0.5) {
            Formula::exists(x, body)
        } else {
            Formula::forall(x, body)
        };
    }
    if depth > 0 && roll < 8 {
        let mut sub = |rng: &mut R| gen_sentence(rng, spec, rank, depth - 1, scope, bound);
        return match rng.gen_range(0..4) {
            0 => sub(rng).negate(),
            1 => sub(rng).and(sub(rng)),
            2 => sub(rng).or(sub(rng)),
            _ => sub(rng).implies(sub(rng)),
        };
    }
    random_atom(rng, spec, scope)
}

fn random_atom(rng: &mut impl Rng, spec: &SentenceSpec, scope: &[Var]) -> Formula {
    let var = |rng: &mut dyn rand::RngCore| scope.choose(rng).unwrap().clone();
    let relations: Vec<(&String, &usize)> = spec.signature.iter().collect();
    let extended = !matches!(spec.fragment, Fragment::Fo);
    let kinds = 1 + relations.len() + usize::from(extended);
    let kind = rng.gen_range(0..kinds);
    if kind == 0 {
        return Formula::Equals(var(rng), var(rng));
    }
    if kind <= relations.len() {
        let (name, &arity) = relations[kind - 1];
        return Formula::Rel(name.clone(), (0..arity).map(|_| var(rng)).collect());
    }
    match spec.fragment {
        Fragment::Conn(k) => {
            let l = rng.gen_range(0..=k);
            Formula::Conn {
                x: var(rng),
                y: var(rng),
                deleted: (0..l).map(|_| var(rng)).collect(),
            }
        }
        Fragment::Dp(k) => {
            let l = rng.gen_range(1..=k);
            Formula::Dp((0..l).map(|_| (var(rng), var(rng))).collect())
        }
        Fragment::Fo => unreachable!(),
    }
}

/// Arbitrary formula of nesting depth at most `depth`, over a small pool of
/// variable and relation names, with free variables and shadowing allowed.
pub fn random_formula(rng: &mut impl Rng, depth: usize) -> Formula {
    const VARS: [&str; 7] = ["x", "y", "z", "u", "v'", "_v0", "w1"];
    const RELS: [(&str, usize); 5] = [("E", 2), ("R", 1), ("P", 3), ("<", 2), ("Q", 0)];
    let var = |rng: &mut dyn rand::RngCore| VARS.choose(rng).unwrap().to_string();
    let choice = if depth == 0 { rng.gen_range(0..4) } else { rng.gen_range(0..10) };
    match choice {
        0 => Formula::Equals(var(rng), var(rng)),
        1 => {
            let (name, arity) = *RELS.choose(rng).unwrap();
            Formula::Rel(name.to_string(), (0..arity).map(|_| var(rng)).collect())
        }
        2 => {
            let k = rng.gen_range(0..3);
            Formula::Conn {
                x: var(rng),
                y: var(rng),
                deleted: (0..k).map(|_| var(rng)).collect(),
            }
        }
        3 => {
            let k = rng.gen_range(1..4);
            Formula::Dp((0..k).map(|_| (var(rng), var(rng))).collect())
        }
        4 => random_formula(rng, depth - 1).negate(),
        5 => random_formula(rng, depth - 1).and(random_formula(rng, depth - 1)),
        6 => random_formula(rng, depth - 1).or(random_formula(rng, depth - 1)),
        7 => random_formula(rng, depth - 1).implies(random_formula(rng, depth - 1)),
        8 => Formula::exists(var(rng), random_formula(rng, depth - 1)),
        _ => Formula::forall(var(rng), random_formula(rng, depth - 1)),
    }
}
