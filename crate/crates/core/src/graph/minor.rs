//! Brute-force minor, topological-minor and planarity oracles.

use super::paths::disjoint_paths_unchecked;
use super::{Graph, Vertex};

const UNASSIGNED: usize = usize::MAX;
const UNUSED: usize = usize::MAX - 1;

/// Whether `h` is a topological minor of `g`: some injection of `V(h)` into
/// `V(g)` admits internally vertex-disjoint paths for all edges of `h`.
///
/// The images of isolated vertices of `h` are kept off every path, as with
/// the other branch vertices (they enter the path query as `(x, x)` pairs).
pub fn is_topological_minor(h: &Graph, g: &Graph) -> bool {
    if h.n() == 0 {
        return true;
    }
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return false;
    }
    let mut order: Vec<Vertex> = (0..h.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let mut image = vec![UNASSIGNED; h.n()];
    let mut used = vec![false; g.n()];
    place_branch_vertices(h, g, &order, 0, &mut image, &mut used)
}

fn place_branch_vertices(
    h: &Graph,
    g: &Graph,
    order: &[Vertex],
    i: usize,
    image: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    if i == order.len() {
        let mut pairs: Vec<(Vertex, Vertex)> = h.edges().map(|(u, v)| (image[u], image[v])).collect();
        pairs.extend((0..h.n()).filter(|&v| h.degree(v) == 0).map(|v| (image[v], image[v])));
        return disjoint_paths_unchecked(g, &pairs);
    }
    let v = order[i];
    for x in 0..g.n() {
        if used[x] || g.degree(x) < h.degree(v) {
            continue;
        }
        image[v] = x;
        used[x] = true;
        if place_branch_vertices(h, g, order, i + 1, image, used) {
            return true;
        }
        used[x] = false;
    }
    image[v] = UNASSIGNED;
    false
}

/// Whether `h` is a minor of `g`, by searching for branch sets: pairwise
/// disjoint connected vertex sets, one per vertex of `h`, with an edge of
/// `g` between the sets of every edge of `h`.
///
/// When `h` is connected a model can always be grown until it covers a
/// whole component of `g`, so only partitions of single components are
/// searched; otherwise vertices may also stay unused.
pub fn is_minor(h: &Graph, g: &Graph) -> bool {
    if h.n() == 0 {
        return true;
    }
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return false;
    }
    if h.is_connected() {
        g.components().iter().any(|comp| {
            if comp.len() < h.n() {
                return false;
            }
            let mut label = vec![UNUSED; g.n()];
            for &v in comp {
                label[v] = UNASSIGNED;
            }
            BranchSearch::new(h, g, bfs_order(g, comp), false).run(&mut label)
        })
    } else {
        let all: Vec<Vertex> = (0..g.n()).collect();
        let order = bfs_order(g, &all);
        BranchSearch::new(h, g, order, true).run(&mut vec![UNASSIGNED; g.n()])
    }
}

/// Planar iff neither `K5` nor `K3,3` is a minor.
pub fn is_planar(g: &Graph) -> bool {
    !is_minor(&Graph::complete(5), g) && !is_minor(&Graph::complete_bipartite(3, 3), g)
}

fn bfs_order(g: &Graph, vertices: &[Vertex]) -> Vec<Vertex> {
    let mut inside = vec![false; g.n()];
    for &v in vertices {
        inside[v] = true;
    }
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(vertices.len());
    for &s in vertices {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in g.neighbors(v) {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct BranchSearch<'a> {
    h: &'a Graph,
    g: &'a Graph,
    order: Vec<Vertex>,
    allow_unused: bool,
    h_edges: Vec<(usize, usize)>,
}

impl<'a> BranchSearch<'a> {
    fn new(h: &'a Graph, g: &'a Graph, order: Vec<Vertex>, allow_unused: bool) -> Self {
        BranchSearch {
            h,
            g,
            order,
            allow_unused,
            h_edges: h.edges().collect(),
        }
    }

    fn run(&self, label: &mut [usize]) -> bool {
        let mut counts = vec![0usize; self.h.n()];
        self.assign(0, label, &mut counts)
    }

    fn assign(&self, i: usize, label: &mut [usize], counts: &mut [usize]) -> bool {
        if !self.feasible(i, label, counts) {
            return false;
        }
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        for c in 0..self.h.n() {
            label[v] = c;
            counts[c] += 1;
            let ok = self.assign(i + 1, label, counts);
            counts[c] -= 1;
            if ok {
                label[v] = UNASSIGNED;
                return true;
            }
        }
        if self.allow_unused {
            label[v] = UNUSED;
            if self.assign(i + 1, label, counts) {
                label[v] = UNASSIGNED;
                return true;
            }
        }
        label[v] = UNASSIGNED;
        false
    }

    /// Necessary conditions that become exact once every vertex is labelled:
    /// every branch set can still become nonempty and connected, and every
    /// edge of `h` can still be realised.
    fn feasible(&self, i: usize, label: &[usize], counts: &[usize]) -> bool {
        let remaining = self.order.len() - i;
        let missing = counts.iter().filter(|&&c| c == 0).count();
        if missing > remaining {
            return false;
        }
        let g = self.g;
        let open = |v: Vertex, c: usize| label[v] == c || label[v] == UNASSIGNED;
        for (c, &count) in counts.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let start = match (0..g.n()).find(|&v| label[v] == c) {
                Some(s) => s,
                None => continue,
            };
            let mut seen = vec![false; g.n()];
            seen[start] = true;
            let mut stack = vec![start];
            let mut reached = 1;
            while let Some(v) = stack.pop() {
                for &w in g.neighbors(v) {
                    if !seen[w] && open(w, c) {
                        seen[w] = true;
                        if label[w] == c {
                            reached += 1;
                        }
                        stack.push(w);
                    }
                }
            }
            if reached < count {
                return false;
            }
        }
        self.h_edges.iter().all(|&(c, d)| {
            g.edges()
                .any(|(p, q)| (open(p, c) && open(q, d)) || (open(p, d) && open(q, c)))
        })
    }
}
