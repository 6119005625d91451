//! Shared corpus and brute-force oracles for the integration tests.

#![allow(dead_code)]

use rand::Rng;

use seplogic::graph::iso::all_graphs;
use seplogic::random::{random_graph, rng};
use seplogic::{Graph, RelationalStructure, Vertex};

pub const CORPUS_SEED: u64 = 0x5e9_1091c;

/// 200 seeded random graphs on 1 to 7 vertices with varying density.
pub fn random_corpus() -> Vec<Graph> {
    let mut r = rng(CORPUS_SEED);
    (0..200)
        .map(|_| {
            let n = r.gen_range(1..=7);
            let p = r.gen_range(0.15..0.85);
            random_graph(&mut r, n, p)
        })
        .collect()
}

/// One graph of every isomorphism type on `1..=n` vertices. Structures
/// have non-empty universes, so the empty graph is left out.
pub fn all_nonempty_graphs(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(all_graphs).collect()
}

/// The random corpus plus one graph of every isomorphism type on at most
/// five vertices.
pub fn corpus() -> Vec<Graph> {
    let mut graphs = random_corpus();
    graphs.extend(all_nonempty_graphs(5));
    graphs
}

/// One graph of every isomorphism type on at most six vertices, plus the
/// random corpus.
pub fn small_graphs_and_corpus() -> Vec<Graph> {
    let mut graphs = all_nonempty_graphs(6);
    graphs.extend(random_corpus());
    graphs
}

pub fn structure(g: &Graph) -> RelationalStructure {
    RelationalStructure::from_graph(g).unwrap()
}

/// Every simple path between each pair of vertices, as the bitmask of its
/// internal vertices. Indexed by `x * n + y`.
pub struct PathTable {
    n: usize,
    internals: Vec<Vec<u32>>,
}

impl PathTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        assert!(n <= 32);
        let mut internals = vec![Vec::new(); n * n];
        for x in 0..n {
            internals[x * n + x].push(0);
            let mut path = vec![x];
            walk(g, &mut path, 1 << x, &mut internals);
        }
        PathTable { n, internals }
    }

    /// Whether every pair can be linked so that no vertex lies inside two
    /// paths and no pair endpoint lies inside any path.
    pub fn linkable(&self, pairs: &[(Vertex, Vertex)]) -> bool {
        let ends = pairs.iter().fold(0u32, |m, &(x, y)| m | 1 << x | 1 << y);
        self.choose(pairs, ends)
    }

    fn choose(&self, pairs: &[(Vertex, Vertex)], used: u32) -> bool {
        let Some((&(x, y), rest)) = pairs.split_first() else {
            return true;
        };
        self.internals[x * self.n + y]
            .iter()
            .any(|&inside| inside & used == 0 && self.choose(rest, used | inside))
    }
}

fn walk(g: &Graph, path: &mut Vec<Vertex>, on_path: u32, out: &mut [Vec<u32>]) {
    let n = g.n();
    let x = path[0];
    let v = *path.last().unwrap();
    for &w in g.neighbors(v) {
        if on_path & (1 << w) != 0 {
            continue;
        }
        let inside = on_path & !(1 << x);
        out[x * n + w].push(inside);
        path.push(w);
        walk(g, path, on_path | 1 << w, out);
        path.pop();
    }
}

/// Calls `f` on every tuple in `0..n` of length `len`.
pub fn for_each_tuple(n: usize, len: usize, f: &mut impl FnMut(&[Vertex])) {
    fn go(n: usize, tuple: &mut Vec<Vertex>, len: usize, f: &mut impl FnMut(&[Vertex])) {
        if tuple.len() == len {
            f(tuple);
            return;
        }
        for v in 0..n {
            tuple.push(v);
            go(n, tuple, len, f);
            tuple.pop();
        }
    }
    go(n, &mut Vec::with_capacity(len), len, f);
}

/// Calls `f` on every multiset of `len` items from `items`, as a sorted
/// slice of indices.
pub fn for_each_multiset(items: usize, len: usize, f: &mut impl FnMut(&[usize])) {
    fn go(items: usize, from: usize, picked: &mut Vec<usize>, len: usize, f: &mut impl FnMut(&[usize])) {
        if picked.len() == len {
            f(picked);
            return;
        }
        for i in from..items {
            picked.push(i);
            go(items, i, picked, len, f);
            picked.pop();
        }
    }
    go(items, 0, &mut Vec::with_capacity(len), len, f);
}

/// Names `z1, ..., zk`.
pub fn z_names(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("z{i}")).collect()
}
