//! Graph pairs that the logics cannot tell apart at small quantifier rank.

use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Index of the ladder vertex `v_{i,j}`, `i ∈ {1, 2}`, `j ∈ 1..=n`.
pub fn ladder_vertex(n: usize, i: usize, j: usize) -> Vertex {
    assert!((1..=2).contains(&i) && (1..=n).contains(&j));
    (i - 1) * n + (j - 1)
}

fn ladder(n: usize, crossed: bool) -> Graph {
    let v = |i, j| ladder_vertex(n, i, j);
    let mut g = Graph::empty(2 * n);
    for j in 1..=n {
        g.add_edge(v(1, j), v(2, j));
    }
    for i in 1..=2 {
        for j in 1..n {
            g.add_edge(v(i, j), v(i, j + 1));
        }
    }
    if crossed {
        g.add_edge(v(1, 1), v(2, n));
        g.add_edge(v(2, 1), v(1, n));
    } else {
        g.add_edge(v(1, 1), v(1, n));
        g.add_edge(v(2, 1), v(2, n));
    }
    g
}

/// Circular ladder `G_q` and Möbius ladder `H_q` with `n = 2^(q+1)` rungs.
/// The first is planar, the second is not.
pub fn gen_planarity_pair(q: usize) -> (Graph, Graph) {
    assert!(q >= 1);
    let n = 1 << (q + 1);
    (ladder(n, false), ladder(n, true))
}

/// The four opening pairs for the planarity pair: `v_{1,1} ↦ v'_{1,1}`,
/// `v_{2,1} ↦ v'_{2,1}`, `v_{1,n} ↦ v'_{2,n}` and `v_{2,n} ↦ v'_{1,n}`.
pub fn planarity_pins(q: usize) -> Vec<(Vertex, Vertex)> {
    let n = 1 << (q + 1);
    let v = |i, j| ladder_vertex(n, i, j);
    vec![
        (v(1, 1), v(1, 1)),
        (v(2, 1), v(2, 1)),
        (v(1, n), v(2, n)),
        (v(2, n), v(1, n)),
    ]
}

/// `C_{2^(q+2)}` and two disjoint copies of `C_{2^(q+1)}`.
pub fn apex_clique_base_pair(q: usize) -> (Graph, Graph) {
    assert!(q >= 1);
    let half = Graph::cycle(1 << (q + 1));
    (Graph::cycle(1 << (q + 2)), half.disjoint_union(&half))
}

/// `g` joined to a fresh `K_m` by all cross edges; the clique comes last.
pub fn join_clique(g: &Graph, m: usize) -> Graph {
    let mut out = g.disjoint_union(&Graph::complete(m));
    for v in 0..g.n() {
        for c in g.n()..g.n() + m {
            out.add_edge(v, c);
        }
    }
    out
}

/// The base pair of [`apex_clique_base_pair`], each joined to `K_{k+1}`.
/// The first graph is `(k + 2)`-connected; deleting the clique from the
/// second disconnects it.
pub fn gen_apex_clique_pair(q: usize, k: usize) -> (Graph, Graph) {
    let (g, h) = apex_clique_base_pair(q);
    (join_clique(&g, k + 1), join_clique(&h, k + 1))
}

/// Lexicographic product `g[K_m]`: vertex `(i, j)` is `i * m + j`, and
/// `(i, j) ~ (i', j')` iff `i = i'` (and `j != j'`) or `i ~ i'` in `g`.
pub fn lexicographic_product(g: &Graph, m: usize) -> Graph {
    assert!(m >= 1);
    let mut out = Graph::empty(g.n() * m);
    for i in 0..g.n() {
        for j in 0..m {
            for j2 in j + 1..m {
                out.add_edge(i * m + j, i * m + j2);
            }
        }
    }
    for (i, i2) in g.edges() {
        for j in 0..m {
            for j2 in 0..m {
                out.add_edge(i * m + j, i2 * m + j2);
            }
        }
    }
    out
}

/// `C_{2^(q+1)}` plus an apex against `2 C_{2^q}` plus an apex, before the
/// product. The apex is the last vertex.
pub fn dp_base_pair(q: usize) -> (Graph, Graph) {
    assert!(q >= 1);
    let cycle = |len: usize| if len >= 3 { Graph::cycle(len) } else { Graph::path(len) };
    let small = cycle(1 << q);
    (
        join_clique(&cycle(1 << (q + 1)), 1),
        join_clique(&small.disjoint_union(&small), 1),
    )
}

/// [`dp_base_pair`] with every vertex blown up into a `K_{2k}`.
pub fn gen_dp_pair(q: usize, k: usize) -> (Graph, Graph) {
    assert!(k >= 1);
    let (g, h) = dp_base_pair(q);
    (lexicographic_product(&g, 2 * k), lexicographic_product(&h, 2 * k))
}

/// `C_{2^q}` and `C_{2^q + 1}`; needs `q >= 2` for the first to be a cycle.
pub fn gen_bipartite_pair(q: usize) -> (Graph, Graph) {
    assert!(q >= 2, "C_2 is not a simple cycle");
    (Graph::cycle(1 << q), Graph::cycle((1 << q) + 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`; available: planarity-pair, apex-clique-pair, dp-pair, bipartite-pair")]
    Unknown(String),
    #[error("family `{family}` needs {requirement}")]
    Parameters { family: String, requirement: String },
}

pub const FAMILIES: &[&str] = &["planarity-pair", "apex-clique-pair", "dp-pair", "bipartite-pair"];

/// Generates a family by name. `k` is used by `apex-clique-pair` (default
/// 1) and `dp-pair` (default 1).
pub fn generate(name: &str, q: usize, k: Option<usize>) -> Result<(Graph, Graph), FamilyError> {
    let need = |requirement: &str| FamilyError::Parameters {
        family: name.to_string(),
        requirement: requirement.to_string(),
    };
    let k = k.unwrap_or(1);
    match name {
        "planarity-pair" if q >= 1 => Ok(gen_planarity_pair(q)),
        "apex-clique-pair" if q >= 1 => Ok(gen_apex_clique_pair(q, k)),
        "dp-pair" if q >= 1 && k >= 1 => Ok(gen_dp_pair(q, k)),
        "bipartite-pair" if q >= 2 => Ok(gen_bipartite_pair(q)),
        "planarity-pair" | "apex-clique-pair" => Err(need("q >= 1")),
        "dp-pair" => Err(need("q >= 1 and k >= 1")),
        "bipartite-pair" => Err(need("q >= 2")),
        _ => Err(FamilyError::Unknown(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladders() {
        let (g, h) = gen_planarity_pair(1);
        assert_eq!((g.n(), g.edge_count()), (8, 12));
        assert_eq!((h.n(), h.edge_count()), (8, 12));
        assert!((0..8).all(|v| g.degree(v) == 3 && h.degree(v) == 3));
        assert!(h.has_edge(ladder_vertex(4, 1, 1), ladder_vertex(4, 2, 4)));
    }

    #[test]
    fn products() {
        assert_eq!(lexicographic_product(&Graph::complete(1), 4), Graph::complete(4));
        assert_eq!(lexicographic_product(&Graph::path(2), 2), Graph::complete(4));
        let g = Graph::cycle(5);
        let p = lexicographic_product(&g, 3);
        assert_eq!(p.n(), 15);
        assert_eq!(p.edge_count(), 5 * 3 + 5 * 9);
    }

    #[test]
    fn pair_sizes() {
        let (g, h) = gen_dp_pair(2, 1);
        assert_eq!((g.n(), h.n()), (18, 18));
        let (g, h) = gen_apex_clique_pair(1, 1);
        assert_eq!((g.n(), h.n()), (10, 10));
        let (g, h) = gen_bipartite_pair(3);
        assert_eq!((g.n(), h.n()), (8, 9));
        assert!(matches!(generate("nope", 1, None), Err(FamilyError::Unknown(_))));
    }
}
