//! Finite simple undirected graphs and brute-force oracles for the graph
//! properties the formula library expresses.
//!
//! Every oracle here is exponential in the worst case. Minor and planarity
//! checks are meant for graphs with at most a dozen or so vertices; the
//! BFS-based checks are fine up to a few hundred.

mod io;
pub mod iso;
mod minor;
mod oracle;
mod paths;

pub(crate) use io::content_lines;
pub use minor::{is_minor, is_planar, is_topological_minor};
pub use oracle::{elimination_distance, is_bipartite, is_k_connected, min_fvs_size, EliminationDistance};
pub use paths::disjoint_paths_exist;
pub(crate) use paths::disjoint_paths_unchecked;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("disjoint-paths query needs at least one pair")]
    NoPairs,
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

/// A finite simple undirected graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Rejects loops, out-of-range
    /// endpoints and repeated edges (in either orientation).
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.insert_edge(u, v);
        Ok(())
    }

    /// Adds `{u, v}` unless it is already present. Panics on loops or
    /// out-of-range endpoints; meant for generators.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        assert_ne!(u, v, "self-loop");
        if !self.has_edge(u, v) {
            self.insert_edge(u, v);
        }
    }

    fn insert_edge(&mut self, u: Vertex, v: Vertex) {
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
        true
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    /// The cycle `C_n`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Graph::path(n);
        g.insert_edge(n - 1, 0);
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Looks up `K<n>`, `K<a>,<b>`, `C<n>` (n >= 3) or `P<n>` (path on `n`
    /// vertices).
    pub fn named(name: &str) -> Option<Graph> {
        let (kind, rest) = name.split_at(name.find(|c: char| c.is_ascii_digit())?);
        let nums: Vec<usize> = rest.split(',').map(|s| s.trim().parse().ok()).collect::<Option<_>>()?;
        match (kind, nums.as_slice()) {
            ("K", [n]) => Some(Graph::complete(*n)),
            ("K", [a, b]) => Some(Graph::complete_bipartite(*a, *b)),
            ("C", [n]) if *n >= 3 => Some(Graph::cycle(*n)),
            ("P", [n]) => Some(Graph::path(*n)),
            _ => None,
        }
    }

    /// Vertices of `self` followed by vertices of `other`, shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + self.n, v + self.n);
        }
        g
    }

    /// The subgraph induced on `keep`, relabelled in the order given.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    /// `G - deleted`, with the surviving vertices renumbered in increasing order.
    pub fn without(&self, deleted: &[Vertex]) -> Graph {
        let keep: Vec<Vertex> = (0..self.n).filter(|v| !deleted.contains(v)).collect();
        self.induced(&keep)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edges().collect()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `u` and `v` are connected in `G - deleted`.
    ///
    /// False whenever `u` or `v` is itself deleted. When `u == v` survives
    /// the deletion the single-vertex path connects it to itself.
    pub fn connected_after_deletion(
        &self,
        u: Vertex,
        v: Vertex,
        deleted: &[Vertex],
    ) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        for &z in deleted {
            self.check_vertex(z)?;
        }
        Ok(self.conn_unchecked(u, v, deleted))
    }

    pub(crate) fn conn_unchecked(&self, u: Vertex, v: Vertex, deleted: &[Vertex]) -> bool {
        if deleted.contains(&u) || deleted.contains(&v) {
            return false;
        }
        if u == v {
            return true;
        }
        let mut seen = vec![false; self.n];
        for &z in deleted {
            seen[z] = true;
        }
        seen[u] = true;
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            for &w in &self.adj[x] {
                if w == v {
                    return true;
                }
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    /// Depth-first search for a cycle.
    pub fn has_cycle(&self) -> bool {
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = v;
                        stack.push(w);
                    } else if parent[v] != w {
                        return true;
                    }
                }
            }
        }
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// A path given by its vertex sequence; single-vertex paths are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    /// Checks distinctness and that consecutive vertices are adjacent in `g`.
    pub fn new(g: &Graph, vertices: Vec<Vertex>) -> Option<Path> {
        if vertices.is_empty() {
            return None;
        }
        for (i, &v) in vertices.iter().enumerate() {
            if v >= g.n() || vertices[..i].contains(&v) {
                return None;
            }
        }
        if vertices.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
            return None;
        }
        Some(Path { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn internal(&self) -> &[Vertex] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn is_endpoint(&self, v: Vertex) -> bool {
        v == self.start() || v == self.end()
    }

    /// Every vertex occurring on both paths is an endpoint of both.
    pub fn internally_disjoint(&self, other: &Path) -> bool {
        self.vertices
            .iter()
            .filter(|v| other.vertices.contains(v))
            .all(|&v| self.is_endpoint(v) && other.is_endpoint(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn conn_after_deletion_examples() {
        let p3 = Graph::path(3);
        assert!(p3.connected_after_deletion(0, 2, &[]).unwrap());
        assert!(!p3.connected_after_deletion(0, 2, &[1]).unwrap());
        assert!(!p3.connected_after_deletion(0, 2, &[0]).unwrap());
        let c4 = Graph::cycle(4);
        assert!(c4.connected_after_deletion(0, 2, &[1]).unwrap());
        // single-vertex path
        assert!(p3.connected_after_deletion(1, 1, &[0]).unwrap());
        assert!(!p3.connected_after_deletion(1, 1, &[1]).unwrap());
        assert!(p3.connected_after_deletion(0, 3, &[]).is_err());
        assert!(p3.connected_after_deletion(0, 1, &[7]).is_err());
    }

    #[test]
    fn cycles() {
        assert!(Graph::cycle(3).has_cycle());
        assert!(!Graph::path(3).has_cycle());
        assert!(Graph::cycle(3).disjoint_union(&Graph::cycle(3)).has_cycle());
        assert!(!Graph::empty(4).has_cycle());
    }

    #[test]
    fn path_internals() {
        let g = Graph::cycle(5);
        let p = Path::new(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(p.internal(), &[1]);
        let single = Path::new(&g, vec![3]).unwrap();
        assert!(single.internal().is_empty());
        assert!(Path::new(&g, vec![0, 2]).is_none());
        assert!(p.internally_disjoint(&Path::new(&g, vec![2, 3, 4, 0]).unwrap()));
        assert!(!p.internally_disjoint(&Path::new(&g, vec![1, 0]).unwrap()));
    }

    #[test]
    fn induced_and_union() {
        let g = Graph::cycle(4).without(&[0]);
        assert_eq!(g, Graph::path(3));
        let u = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(u.edge_set(), [(0, 1), (2, 3)].into_iter().collect());
        assert_eq!(u.components(), vec![vec![0, 1], vec![2, 3]]);
    }
}
