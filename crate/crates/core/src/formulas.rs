//! Builders for the standard `FO+conn` and `FO+DP` constructions.
//!
//! Auxiliary variables come from the reserved namespace `_v0, _v1, ...`
//! (see [`FreshNames`]), so builder output can be combined with user
//! formulas that avoid leading underscores.

use thiserror::Error;

use crate::graph::iso::{are_isomorphic, invariant};
use crate::graph::{Graph, Vertex};
use crate::logic::{comp_relativize, del_relativize, Formula, FormulaError, FreshNames, Var};

/// `∀x ∀y conn(x, y |)`: the graph is connected.
pub fn connectivity() -> Formula {
    Formula::forall_all(["x", "y"], Formula::conn("x", "y", Vec::<Var>::new()))
}

/// `(k + 1)`-connectivity:
/// `∀x ∀y ∀z1 ... ∀zk (⋀ (x != zi & y != zi) -> conn(x, y | z1, ..., zk))`.
///
/// The sentence does not require more than `k + 1` vertices, so it agrees
/// with [`is_k_connected`](crate::graph::is_k_connected)`(g, k + 1)` only
/// on graphs with more than `k + 1` vertices.
pub fn k_connectivity(k: usize) -> Formula {
    if k == 0 {
        return connectivity();
    }
    let zs: Vec<Var> = (1..=k).map(|i| format!("z{i}")).collect();
    let guards = zs
        .iter()
        .flat_map(|z| [Formula::neq("x", z.clone()), Formula::neq("y", z.clone())]);
    let body = Formula::conjunction(guards)
        .unwrap()
        .implies(Formula::conn("x", "y", zs.clone()));
    Formula::forall_all(["x".to_string(), "y".to_string()].into_iter().chain(zs), body)
}

/// `∃x ∃y (E(x, y) & ∃z (conn(z, x | y) & conn(z, y | x)))`: some edge
/// lies on a cycle.
pub fn has_cycle() -> Formula {
    Formula::exists_all(
        ["x", "y"],
        Formula::edge("x", "y").and(Formula::exists(
            "z",
            Formula::conn("z", "x", ["y"]).and(Formula::conn("z", "y", ["x"])),
        )),
    )
}

/// The negation of [`has_cycle`]: the graph is a forest.
pub fn acyclic() -> Formula {
    has_cycle().negate()
}

/// `∀x ∀y !E(x, y)`.
pub fn edgeless() -> Formula {
    Formula::forall_all(["x", "y"], Formula::edge("x", "y").negate())
}

/// `∃z1 del(z1)[∃z2 del(z2)[... ∃zk del(zk)[acyclic] ...]]`: deleting at
/// most `k` vertices leaves a forest. The deleted vertices are pairwise
/// distinct, so on graphs with fewer than `k` vertices the sentence is
/// false.
pub fn fvs(k: usize) -> Formula {
    let base = acyclic();
    let mut fresh = FreshNames::new();
    fresh.avoid(&base);
    let zs: Vec<Var> = (0..k).map(|_| fresh.fresh()).collect();
    zs.iter().rev().fold(base, |inner, z| {
        Formula::exists(z.clone(), del_relativize(z, &inner).expect("inner formula is a sentence"))
    })
}

/// Elimination distance at most `k` to the class defined by `class`:
/// `ed_0 = class` and `ed_{j+1} = ed_j | ∀x (∃y del(y)[ed_j])^[comp(x)]`.
pub fn elimination_distance(k: usize, class: &Formula) -> Result<Formula, FormulaError> {
    let free = class.free_variables();
    if !free.is_empty() {
        return Err(FormulaError::NotASentence(free));
    }
    let mut fresh = FreshNames::new();
    fresh.avoid(class);
    let mut ed = class.clone();
    for _ in 0..k {
        let (x, y) = (fresh.fresh(), fresh.fresh());
        let step = Formula::exists(y.clone(), del_relativize(&y, &ed)?);
        let step = Formula::forall(x.clone(), comp_relativize(&x, &step)?);
        ed = ed.or(step);
    }
    Ok(ed)
}

/// `dp[(x, y), (z1, z1), ..., (zk, zk)] & ⋀ (zi != x & zi != y)`, the
/// `FO+DP(k + 1)` rendering of `conn(x, y | z1, ..., zk)`.
pub fn conn_via_dp(x: &str, y: &str, zs: &[&str]) -> Formula {
    let pairs = std::iter::once((x, y)).chain(zs.iter().map(|&z| (z, z)));
    let guards = zs
        .iter()
        .flat_map(|&z| [Formula::neq(z, x), Formula::neq(z, y)]);
    Formula::conjunction(std::iter::once(Formula::dp(pairs)).chain(guards)).unwrap()
}

fn branch_var(v: Vertex) -> Var {
    format!("x{v}")
}

/// `φ^top_H`: distinct branch vertices `x0, ..., x(n-1)` joined by
/// internally disjoint paths along the edges of `h`, with a trivial pair
/// `(xi, xi)` for every isolated vertex so that no path runs through it.
pub fn topological_minor_formula(h: &Graph) -> Formula {
    assert!(h.n() > 0, "the pattern graph needs a vertex");
    let vars: Vec<Var> = (0..h.n()).map(branch_var).collect();
    let mut pairs: Vec<(Var, Var)> = h.edges().map(|(u, v)| (branch_var(u), branch_var(v))).collect();
    pairs.extend(
        (0..h.n())
            .filter(|&v| h.degree(v) == 0)
            .map(|v| (branch_var(v), branch_var(v))),
    );
    let mut parts = Vec::new();
    for i in 0..h.n() {
        for j in i + 1..h.n() {
            parts.push(Formula::neq(vars[i].clone(), vars[j].clone()));
        }
    }
    parts.push(Formula::Dp(pairs));
    Formula::exists_all(vars, Formula::conjunction(parts).unwrap())
}

/// Trees whose leaves `0..d` are labelled and whose other nodes, numbered
/// `0..internal`, have degree at least three.
#[derive(Debug, Clone)]
struct LeafTree {
    internal: usize,
    edges: Vec<(usize, usize)>,
    /// Internal node each leaf hangs from.
    attach: Vec<usize>,
}

/// All such trees with `d >= 3` leaves, each exactly once: leaf `i` is
/// added to a tree on leaves `0..i` either at an internal node or on a new
/// node subdividing an edge.
fn leaf_trees(d: usize) -> Vec<LeafTree> {
    assert!(d >= 3);
    let mut trees = vec![LeafTree {
        internal: 1,
        edges: Vec::new(),
        attach: vec![0; 3],
    }];
    for _ in 3..d {
        let mut next = Vec::new();
        for t in &trees {
            for c in 0..t.internal {
                let mut u = t.clone();
                u.attach.push(c);
                next.push(u);
            }
            for e in 0..t.edges.len() {
                let mut u = t.clone();
                let (a, b) = u.edges[e];
                let w = u.internal;
                u.internal += 1;
                u.edges[e] = (a, w);
                u.edges.push((w, b));
                u.attach.push(w);
                next.push(u);
            }
            for leaf in 0..t.attach.len() {
                let mut u = t.clone();
                let w = u.internal;
                u.internal += 1;
                u.edges.push((u.attach[leaf], w));
                u.attach[leaf] = w;
                u.attach.push(w);
                next.push(u);
            }
        }
        trees = next;
    }
    trees
}

/// Graphs `H_1, ..., H_l` with `H ≼ G` iff some `H_i` is a topological
/// minor of `G`. Every vertex of degree `d >= 3` is replaced by each tree
/// with `d` labelled leaves (internal degree at least three), the leaves
/// taking over the incident edges, and the leaves are then suppressed.
/// Results are deduplicated up to isomorphism.
pub fn topological_expansion_family(h: &Graph) -> Vec<Graph> {
    let choices: Vec<Vec<LeafTree>> = (0..h.n())
        .map(|v| match h.degree(v) {
            d if d >= 3 => leaf_trees(d),
            _ => Vec::new(),
        })
        .collect();
    let mut family: Vec<Graph> = Vec::new();
    let mut pick = vec![0usize; h.n()];
    loop {
        let g = expand(h, &choices, &pick);
        let inv = invariant(&g);
        if !family.iter().any(|f| invariant(f) == inv && are_isomorphic(f, &g)) {
            family.push(g);
        }
        // odometer over the per-vertex tree choices
        let mut v = 0;
        loop {
            if v == h.n() {
                return family;
            }
            if choices[v].len() > 1 && pick[v] + 1 < choices[v].len() {
                pick[v] += 1;
                break;
            }
            pick[v] = 0;
            v += 1;
        }
    }
}

fn expand(h: &Graph, choices: &[Vec<LeafTree>], pick: &[usize]) -> Graph {
    // first node of every vertex's tree (or the vertex itself)
    let mut offset = Vec::with_capacity(h.n());
    let mut total = 0;
    for v in 0..h.n() {
        offset.push(total);
        total += choices[v].get(pick[v]).map_or(1, |t| t.internal);
    }
    let mut g = Graph::empty(total);
    // node of v's tree that carries the edge towards u
    let port = |v: Vertex, u: Vertex| match choices[v].get(pick[v]) {
        Some(t) => {
            let leaf = h.neighbors(v).iter().position(|&w| w == u).unwrap();
            offset[v] + t.attach[leaf]
        }
        None => offset[v],
    };
    for v in 0..h.n() {
        if let Some(t) = choices[v].get(pick[v]) {
            for &(a, b) in &t.edges {
                g.add_edge(offset[v] + a, offset[v] + b);
            }
        }
    }
    for (u, v) in h.edges() {
        g.add_edge(port(u, v), port(v, u));
    }
    g
}

/// `φ_H`: the disjunction of [`topological_minor_formula`] over
/// [`topological_expansion_family`]`(h)`.
pub fn minor_formula(h: &Graph) -> Formula {
    Formula::disjunction(topological_expansion_family(h).iter().map(topological_minor_formula)).unwrap()
}

/// `!φ_{K5} & !φ_{K3,3}`.
pub fn planarity_formula() -> Formula {
    minor_formula(&Graph::complete(5))
        .negate()
        .and(minor_formula(&Graph::complete_bipartite(3, 3)).negate())
}

/// `∃r (R(r) & conn(x, r | y) & !conn(y, r | x))`: on a tree rooted at the
/// element marked by the unary relation `R`, `x` is a proper ancestor of `y`.
pub fn tree_order_via_conn(x: &str, y: &str) -> Formula {
    let mut fresh = FreshNames::new();
    fresh.avoid_name(x).avoid_name(y);
    let r = fresh.fresh();
    Formula::exists(
        r.clone(),
        Formula::rel("R", [r.clone()])
            .and(Formula::conn(x, r.clone(), [y]))
            .and(Formula::conn(y, r, [x]).negate()),
    )
}

fn lt(a: &str, b: &str) -> Formula {
    Formula::rel("<", [a, b])
}

fn le(a: &str, b: &str) -> Formula {
    lt(a, b).or(Formula::eq(a, b))
}

/// `conn(x, y | z1, ..., zk)` on rooted trees, expressed with the ancestor
/// order `<` only: with `z` the lowest common ancestor of `x` and `y`, no
/// `zi` may lie on the path from `z` down to `x` or down to `y`.
pub fn conn_via_order(x: &str, y: &str, zs: &[&str]) -> Formula {
    let mut fresh = FreshNames::new();
    fresh.avoid_name(x).avoid_name(y);
    for z in zs {
        fresh.avoid_name(z);
    }
    let (z, w) = (fresh.fresh(), fresh.fresh());
    let lca = le(&z, x).and(le(&z, y)).and(
        Formula::exists(
            w.clone(),
            lt(&z, &w).and(le(&w, x)).and(le(&w, y)),
        )
        .negate(),
    );
    let avoid = zs.iter().map(|zi| {
        le(&z, zi)
            .and(le(zi, x))
            .or(le(&z, zi).and(le(zi, y)))
            .negate()
    });
    Formula::exists(z.clone(), Formula::conjunction(std::iter::once(lca).chain(avoid)).unwrap())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LibraryError {
    #[error("unknown formula `{0}`; available: {names}", names = library_names())]
    Unknown(String),
    #[error("bad parameters for `{name}`, usage: {usage}")]
    Usage { name: String, usage: String },
}

/// Builder names with their parameter usage, as understood by [`build`].
pub const LIBRARY: &[(&str, &str)] = &[
    ("connectivity", "connectivity"),
    ("k-connectivity", "k-connectivity K"),
    ("acyclic", "acyclic"),
    ("fvs", "fvs K"),
    ("ed", "ed K  (elimination distance to edgeless graphs)"),
    ("conn-via-dp", "conn-via-dp K  (free variables x, y, z1..zK)"),
    ("topological-minor", "topological-minor H  (H = Kn, Ka,b, Cn or Pn)"),
    ("minor", "minor H  (H = Kn, Ka,b, Cn or Pn)"),
    ("planarity", "planarity"),
    ("tree-order", "tree-order  (free variables x, y)"),
    ("conn-via-order", "conn-via-order K  (free variables x, y, z1..zK)"),
];

fn library_names() -> String {
    LIBRARY.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", ")
}

/// Builds a library formula by name, e.g. `build("fvs", &["2"])`.
pub fn build(name: &str, params: &[&str]) -> Result<Formula, LibraryError> {
    let usage = || LibraryError::Usage {
        name: name.to_string(),
        usage: LIBRARY.iter().find(|(n, _)| *n == name).unwrap().1.to_string(),
    };
    let number = || match params {
        [k] => k.parse::<usize>().map_err(|_| usage()),
        _ => Err(usage()),
    };
    let graph = || match params {
        [h] => Graph::named(h).filter(|g| g.n() > 0).ok_or_else(usage),
        _ => Err(usage()),
    };
    let none = || if params.is_empty() { Ok(()) } else { Err(usage()) };
    let zs = |k: usize| (1..=k).map(|i| format!("z{i}")).collect::<Vec<_>>();
    Ok(match name {
        "connectivity" => none().map(|_| connectivity())?,
        "k-connectivity" => k_connectivity(number()?),
        "acyclic" => none().map(|_| acyclic())?,
        "fvs" => fvs(number()?),
        "ed" => elimination_distance(number()?, &edgeless()).expect("edgeless is a sentence"),
        "conn-via-dp" => {
            let zs = zs(number()?);
            conn_via_dp("x", "y", &zs.iter().map(String::as_str).collect::<Vec<_>>())
        }
        "topological-minor" => topological_minor_formula(&graph()?),
        "minor" => minor_formula(&graph()?),
        "planarity" => none().map(|_| planarity_formula())?,
        "tree-order" => none().map(|_| tree_order_via_conn("x", "y"))?,
        "conn-via-order" => {
            let zs = zs(number()?);
            conn_via_order("x", "y", &zs.iter().map(String::as_str).collect::<Vec<_>>())
        }
        _ => return Err(LibraryError::Unknown(name.to_string())),
    })
}
