//! Backtracking search for internally vertex-disjoint path systems.
//!
//! Blocking rule: an internal vertex of a chosen path may not occur in any
//! other path and may not be an endpoint of any pair. Endpoints can be
//! shared freely, so a repeated pair `(x, y), (x, y)` asks for two
//! internally disjoint `x`-`y` paths, and `(z, z)` only forbids `z` as an
//! internal vertex.
//!
//! Two reductions keep the search small without changing the answer:
//!
//! * a pair whose endpoints are adjacent is routed along that edge, which
//!   has no internal vertices and therefore blocks nothing;
//! * a path of length at least two leaves its endpoint through an internal,
//!   unblocked neighbour, so an endpoint of `d` such pairs needs `d` free
//!   neighbours;
//! * only induced paths are enumerated. A chord of a path can be used to
//!   shortcut it, and the shortcut's internal vertices are a subset of the
//!   original ones, so any solution can be turned into one made of induced
//!   paths.
//!
//! Pairs are routed in input order, each pair's candidate paths shortest
//! first. The last pair is decided by a plain reachability search, and
//! failed `(pair index, blocked set)` states are memoised.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::{Graph, GraphError, Vertex};

/// Whether `g` has internally vertex-disjoint paths linking every pair.
pub fn disjoint_paths_exist(g: &Graph, pairs: &[(Vertex, Vertex)]) -> Result<bool, GraphError> {
    if pairs.is_empty() {
        return Err(GraphError::NoPairs);
    }
    for &(x, y) in pairs {
        g.check_vertex(x)?;
        g.check_vertex(y)?;
    }
    Ok(disjoint_paths_unchecked(g, pairs))
}

pub(crate) fn disjoint_paths_unchecked(g: &Graph, pairs: &[(Vertex, Vertex)]) -> bool {
    let mut blocked = FixedBitSet::with_capacity(g.n());
    for &(x, y) in pairs {
        blocked.insert(x);
        blocked.insert(y);
    }
    let open: Vec<(Vertex, Vertex)> = pairs
        .iter()
        .copied()
        .filter(|&(x, y)| x != y && !g.has_edge(x, y))
        .collect();
    if open.is_empty() {
        return true;
    }
    let mut demand = vec![0; g.n()];
    for &(x, y) in &open {
        demand[x] += 1;
        demand[y] += 1;
    }
    let starved = demand.iter().enumerate().any(|(v, &d)| {
        d > 0 && g.neighbors(v).iter().filter(|&&w| !blocked.contains(w)).count() < d
    });
    if starved {
        return false;
    }
    let mut search = Search {
        g,
        pairs: &open,
        failed: HashSet::new(),
    };
    search.route(0, &blocked)
}

struct Search<'a> {
    g: &'a Graph,
    pairs: &'a [(Vertex, Vertex)],
    failed: HashSet<(usize, FixedBitSet)>,
}

impl Search<'_> {
    fn route(&mut self, i: usize, blocked: &FixedBitSet) -> bool {
        let (x, y) = self.pairs[i];
        if i + 1 == self.pairs.len() {
            return reachable(self.g, x, y, blocked);
        }
        if self.failed.contains(&(i, blocked.clone())) {
            return false;
        }
        // every pair still has to be routable on its own
        let feasible = self.pairs[i..]
            .iter()
            .all(|&(a, b)| reachable(self.g, a, b, blocked));
        if feasible {
            for path in induced_paths(self.g, x, y, blocked) {
                let mut next = blocked.clone();
                for &v in &path[1..path.len() - 1] {
                    next.insert(v);
                }
                if self.route(i + 1, &next) {
                    return true;
                }
            }
        }
        self.failed.insert((i, blocked.clone()));
        false
    }
}

/// `x` reaches `y` through vertices outside `blocked` (the endpoints
/// themselves may be blocked).
fn reachable(g: &Graph, x: Vertex, y: Vertex, blocked: &FixedBitSet) -> bool {
    let mut seen = blocked.clone();
    seen.insert(x);
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if w == y {
                return true;
            }
            if !seen.contains(w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    false
}

/// All induced `x`-`y` paths whose internal vertices avoid `blocked`,
/// shortest first.
fn induced_paths(g: &Graph, x: Vertex, y: Vertex, blocked: &FixedBitSet) -> Vec<Vec<Vertex>> {
    fn extend(
        g: &Graph,
        y: Vertex,
        blocked: &FixedBitSet,
        path: &mut Vec<Vertex>,
        on_path: &mut FixedBitSet,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let v = *path.last().unwrap();
        if g.has_edge(v, y) {
            // any other continuation would leave the chord v-y
            path.push(y);
            out.push(path.clone());
            path.pop();
            return;
        }
        for &w in g.neighbors(v) {
            if blocked.contains(w) || on_path.contains(w) {
                continue;
            }
            // w may only touch the path at v
            let chord = g.neighbors(w).iter().any(|&u| u != v && on_path.contains(u));
            if chord {
                continue;
            }
            path.push(w);
            on_path.insert(w);
            extend(g, y, blocked, path, on_path, out);
            on_path.set(w, false);
            path.pop();
        }
    }
    let mut out = Vec::new();
    let mut on_path = FixedBitSet::with_capacity(g.n());
    on_path.insert(x);
    extend(g, y, blocked, &mut vec![x], &mut on_path, &mut out);
    out.sort_by_key(Vec::len);
    out
}
