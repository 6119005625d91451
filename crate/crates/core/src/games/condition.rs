//! Winning conditions of the plain, `conn` and `dp` games.
//!
//! Every clause of a winning condition looks at a bounded set of pebble
//! indices, so a violated clause stays violated when pebbles are added.
//! The solver therefore only checks the clauses that mention the newest
//! pebble and stops a line of play at the first violation.

use std::collections::HashMap;

use crate::graph::{disjoint_paths_unchecked, Vertex};
use crate::structure::{Relation, RelationalStructure, EDGE};

use super::Variant;

/// Caches `conn` and `dp` atoms of one structure.
#[derive(Default)]
struct AtomCache {
    conn: HashMap<(Vertex, Vertex, Vec<Vertex>), bool>,
    dp: HashMap<Vec<(Vertex, Vertex)>, bool>,
}

impl AtomCache {
    fn conn(&mut self, s: &RelationalStructure, x: Vertex, y: Vertex, deleted: &[Vertex]) -> bool {
        let mut z = deleted.to_vec();
        z.sort_unstable();
        z.dedup();
        let key = (x.min(y), x.max(y), z);
        if let Some(&hit) = self.conn.get(&key) {
            return hit;
        }
        let result = s.graph().conn_unchecked(x, y, &key.2);
        self.conn.insert(key, result);
        result
    }

    fn dp(&mut self, s: &RelationalStructure, pairs: &[(Vertex, Vertex)]) -> bool {
        let mut key: Vec<(Vertex, Vertex)> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        key.sort_unstable();
        if let Some(&hit) = self.dp.get(&key) {
            return hit;
        }
        let result = disjoint_paths_unchecked(s.graph(), &key);
        self.dp.insert(key, result);
        result
    }
}

pub(crate) struct Checker<'s> {
    a: &'s RelationalStructure,
    b: &'s RelationalStructure,
    variant: Variant,
    relations: Vec<(usize, &'s Relation, &'s Relation)>,
    cache_a: AtomCache,
    cache_b: AtomCache,
}

impl<'s> Checker<'s> {
    /// Both structures must have the same signature.
    pub(crate) fn new(a: &'s RelationalStructure, b: &'s RelationalStructure, variant: Variant) -> Self {
        let relations = a
            .relations()
            .iter()
            .filter(|(name, _)| name.as_str() != EDGE)
            .map(|(name, ra)| (ra.arity, ra, &b.relations()[name]))
            .collect();
        Checker {
            a,
            b,
            variant,
            relations,
            cache_a: AtomCache::default(),
            cache_b: AtomCache::default(),
        }
    }

    /// Whether the whole pebble sequence satisfies the winning condition.
    pub(crate) fn holds(&mut self, pebbles: &[(Vertex, Vertex)]) -> bool {
        (0..pebbles.len()).all(|t| self.extends(&pebbles[..=t]))
    }

    /// Checks the clauses that mention the last pebble, assuming the ones
    /// without it hold.
    pub(crate) fn extends(&mut self, pebbles: &[(Vertex, Vertex)]) -> bool {
        let t = pebbles.len() - 1;
        let (na, nb) = pebbles[t];
        if pebbles[..t].iter().any(|&(a, b)| (a == na) != (b == nb)) {
            return false;
        }
        let (ga, gb) = (self.a.graph(), self.b.graph());
        if pebbles[..t].iter().any(|&(a, b)| ga.has_edge(a, na) != gb.has_edge(b, nb)) {
            return false;
        }
        for &(arity, ra, rb) in &self.relations {
            let mut ok = true;
            for_each_tuple(t + 1, arity, |idx| {
                if ok && idx.contains(&t) {
                    let ta: Vec<Vertex> = idx.iter().map(|&i| pebbles[i].0).collect();
                    let tb: Vec<Vertex> = idx.iter().map(|&i| pebbles[i].1).collect();
                    ok = ra.tuples.contains(&ta) == rb.tuples.contains(&tb);
                }
            });
            if !ok {
                return false;
            }
        }
        match self.variant {
            Variant::Plain => true,
            Variant::Conn(k) => self.conn_clauses(pebbles, k),
            Variant::Dp(k) => self.dp_clauses(pebbles, k),
        }
    }

    fn conn_clauses(&mut self, pebbles: &[(Vertex, Vertex)], k: usize) -> bool {
        let t = pebbles.len() - 1;
        // conn_l over a sequence only depends on the unordered endpoint pair
        // and the set of deleted indices; repetitions pad smaller sets
        let mut sets: Vec<Vec<usize>> = vec![Vec::new()];
        for size in 1..=k.min(t + 1) {
            for_each_subset(t + 1, size, |s| sets.push(s.to_vec()));
        }
        for i in 0..=t {
            for j in i..=t {
                for set in &sets {
                    if i != t && j != t && !set.contains(&t) {
                        continue;
                    }
                    let za: Vec<Vertex> = set.iter().map(|&s| pebbles[s].0).collect();
                    let zb: Vec<Vertex> = set.iter().map(|&s| pebbles[s].1).collect();
                    let in_a = self.cache_a.conn(self.a, pebbles[i].0, pebbles[j].0, &za);
                    let in_b = self.cache_b.conn(self.b, pebbles[i].1, pebbles[j].1, &zb);
                    if in_a != in_b {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dp_clauses(&mut self, pebbles: &[(Vertex, Vertex)], k: usize) -> bool {
        let t = pebbles.len() - 1;
        let pairs: Vec<(usize, usize)> = (0..=t).flat_map(|i| (i..=t).map(move |j| (i, j))).collect();
        let mut ok = true;
        for l in 1..=k {
            // multisets of l index pairs, as nondecreasing sequences
            for_each_multiset(pairs.len(), l, |chosen| {
                if !ok || !chosen.iter().any(|&c| pairs[c].0 == t || pairs[c].1 == t) {
                    return;
                }
                let pa: Vec<(Vertex, Vertex)> = chosen
                    .iter()
                    .map(|&c| (pebbles[pairs[c].0].0, pebbles[pairs[c].1].0))
                    .collect();
                let pb: Vec<(Vertex, Vertex)> = chosen
                    .iter()
                    .map(|&c| (pebbles[pairs[c].0].1, pebbles[pairs[c].1].1))
                    .collect();
                ok = self.cache_a.dp(self.a, &pa) == self.cache_b.dp(self.b, &pb);
            });
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Calls `f` on every sequence in `0..n` of length `len`.
fn for_each_tuple(n: usize, len: usize, mut f: impl FnMut(&[usize])) {
    let mut idx = vec![0; len];
    loop {
        f(&idx);
        let mut p = 0;
        loop {
            if p == len {
                return;
            }
            idx[p] += 1;
            if idx[p] < n {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

/// Calls `f` on every strictly increasing sequence in `0..n` of length `len`.
fn for_each_subset(n: usize, len: usize, mut f: impl FnMut(&[usize])) {
    fn rec(n: usize, len: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == len {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, len, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(n, len, 0, &mut Vec::new(), &mut f);
}

/// Calls `f` on every nondecreasing sequence in `0..n` of length `len`.
fn for_each_multiset(n: usize, len: usize, mut f: impl FnMut(&[usize])) {
    fn rec(n: usize, len: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == len {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, len, i, cur, f);
            cur.pop();
        }
    }
    rec(n, len, 0, &mut Vec::new(), &mut f);
}
