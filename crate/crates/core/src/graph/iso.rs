//! Isomorphism testing and exhaustive enumeration of small graphs.

use std::collections::BTreeSet;

use super::{Graph, Vertex};

/// Invariant that isomorphic graphs share: vertex count, edge count and the
/// sorted multiset of (degree, sorted neighbour degrees).
pub fn invariant(g: &Graph) -> (usize, usize, Vec<(usize, Vec<usize>)>) {
    let mut profile: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    profile.sort();
    (g.n(), g.edge_count(), profile)
}

/// Backtracking isomorphism test with degree filtering.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if invariant(a) != invariant(b) {
        return false;
    }
    let n = a.n();
    // map high-degree vertices first, then neighbours of mapped ones
    let mut order: Vec<Vertex> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let touching = a.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (touching, a.degree(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_iso(a, b, &order, 0, &mut map, &mut used)
}

fn extend_iso(
    a: &Graph,
    b: &Graph,
    order: &[Vertex],
    i: usize,
    map: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    for w in 0..b.n() {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        let consistent = order[..i]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_iso(a, b, order, i + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Canonical edge list: lexicographically least sorted edge list over all
/// vertex permutations. Only practical for `n <= 8` or so.
pub fn canonical_form(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let n = g.n();
    let mut perm: Vec<Vertex> = (0..n).collect();
    let mut best: Option<Vec<(Vertex, Vertex)>> = None;
    loop {
        let mut edges: Vec<(Vertex, Vertex)> = g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices, obtained by adding a vertex with every possible neighbourhood
/// to each class on `n - 1` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut classes: Vec<Graph> = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for base in &classes {
            for mask in 0u32..(1 << (size - 1)) {
                let mut g = Graph::empty(size);
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                for u in 0..size - 1 {
                    if mask & (1 << u) != 0 {
                        g.add_edge(u, size - 1);
                    }
                }
                let canon = canonical_form(&g);
                if seen.insert(canon.clone()) {
                    next.push(Graph::from_edges(size, &canon).unwrap());
                }
            }
        }
        classes = next;
    }
    classes
}

/// Representatives of every isomorphism class on `0..=n` vertices.
pub fn all_graphs_up_to(n: usize) -> Vec<Graph> {
    (0..=n).flat_map(all_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        // OEIS A000088
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn isomorphism() {
        let c6 = Graph::cycle(6);
        let shuffled = c6.relabel(&[3, 5, 0, 2, 4, 1]);
        assert!(are_isomorphic(&c6, &shuffled));
        let two_triangles = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert!(!are_isomorphic(&c6, &two_triangles));
        assert!(!are_isomorphic(&Graph::complete_bipartite(3, 3), &Graph::cycle(6)));
    }
}
