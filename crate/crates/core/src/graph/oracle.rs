use super::{Graph, Vertex};

/// Visits every `size`-subset of `0..n` in lexicographic order until `f`
/// returns `true`.
pub(crate) fn any_subset(n: usize, size: usize, mut f: impl FnMut(&[Vertex]) -> bool) -> bool {
    fn go(
        start: usize,
        n: usize,
        size: usize,
        cur: &mut Vec<Vertex>,
        f: &mut dyn FnMut(&[Vertex]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for v in start..n {
            if n - v < size - cur.len() {
                break;
            }
            cur.push(v);
            if go(v + 1, n, size, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(0, n, size, &mut Vec::with_capacity(size), &mut f)
}

/// `G` has more than `k` vertices and stays connected after deleting any
/// set of fewer than `k` vertices. Checked exhaustively over those sets.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.n() <= k {
        return false;
    }
    (0..k).all(|size| !any_subset(g.n(), size, |x| !g.without(x).is_connected()))
}

/// Breadth-first 2-colouring.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut color = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Size of a smallest vertex set whose removal leaves a forest, by trying
/// subset sizes `0, 1, 2, ...`.
pub fn min_fvs_size(g: &Graph) -> usize {
    (0..=g.n())
        .find(|&size| any_subset(g.n(), size, |x| !g.without(x).has_cycle()))
        .expect("deleting every vertex leaves a forest")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EliminationDistance {
    Exactly(usize),
    ExceedsBudget,
}

/// Elimination distance to the class decided by `in_class`, searched up to
/// `budget`.
///
/// Distance 0 means `g` is in the class; distance at most `d + 1` means
/// every connected component `C` has a vertex `v` with `C - v` at distance
/// at most `d`. The class predicate may be called on the empty graph.
pub fn elimination_distance(
    g: &Graph,
    in_class: &dyn Fn(&Graph) -> bool,
    budget: usize,
) -> EliminationDistance {
    match (0..=budget).find(|&d| within(g, in_class, d)) {
        Some(d) => EliminationDistance::Exactly(d),
        None => EliminationDistance::ExceedsBudget,
    }
}

fn within(g: &Graph, in_class: &dyn Fn(&Graph) -> bool, d: usize) -> bool {
    if in_class(g) {
        return true;
    }
    if d == 0 {
        return false;
    }
    g.components().iter().all(|comp| {
        let c = g.induced(comp);
        (0..c.n()).any(|v| within(&c.without(&[v]), in_class, d - 1))
    })
}
