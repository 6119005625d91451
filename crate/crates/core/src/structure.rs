//! Finite relational structures with a distinguished edge relation `E`.
//!
//! Text format: a line `universe n`, then blocks starting with
//! `rel NAME ARITY` followed by one whitespace-separated tuple per line.
//! The `E` block is mandatory. Blank lines and `#` comments are ignored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub const EDGE: &str = "E";

/// Relation symbol names and arities.
pub type Signature = BTreeMap<String, usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("the universe must be non-empty")]
    EmptyUniverse,
    #[error("structure has no edge relation `E`")]
    MissingEdgeRelation,
    #[error("relation `E` must be binary, found arity {0}")]
    EdgeArity(usize),
    #[error("relation `E` is not irreflexive: contains ({0}, {0})")]
    Reflexive(usize),
    #[error("relation `E` is not symmetric: contains ({0}, {1}) but not ({1}, {0})")]
    Asymmetric(usize, usize),
    #[error("tuple {tuple:?} of `{name}` has length {}, expected {arity}", tuple.len())]
    TupleArity {
        name: String,
        arity: usize,
        tuple: Vec<usize>,
    },
    #[error("element {element} of `{name}` is outside the universe of size {size}")]
    ElementOutOfRange {
        name: String,
        element: usize,
        size: usize,
    },
    #[error("relation `{0}` declared twice")]
    DuplicateRelation(String),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub arity: usize,
    pub tuples: BTreeSet<Vec<usize>>,
}

/// A structure `(A, R_1, ..., R_m)` whose relation `E` is irreflexive and
/// symmetric. The graph `(A, E)` is cached alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationalStructure {
    size: usize,
    relations: BTreeMap<String, Relation>,
    graph: Graph,
}

impl RelationalStructure {
    pub fn new(size: usize, relations: BTreeMap<String, Relation>) -> Result<Self, StructureError> {
        if size == 0 {
            return Err(StructureError::EmptyUniverse);
        }
        for (name, rel) in &relations {
            for t in &rel.tuples {
                if t.len() != rel.arity {
                    return Err(StructureError::TupleArity {
                        name: name.clone(),
                        arity: rel.arity,
                        tuple: t.clone(),
                    });
                }
                if let Some(&e) = t.iter().find(|&&e| e >= size) {
                    return Err(StructureError::ElementOutOfRange {
                        name: name.clone(),
                        element: e,
                        size,
                    });
                }
            }
        }
        let edges = relations.get(EDGE).ok_or(StructureError::MissingEdgeRelation)?;
        if edges.arity != 2 {
            return Err(StructureError::EdgeArity(edges.arity));
        }
        let mut graph = Graph::empty(size);
        for t in &edges.tuples {
            let (u, v) = (t[0], t[1]);
            if u == v {
                return Err(StructureError::Reflexive(u));
            }
            if !edges.tuples.contains(&vec![v, u]) {
                return Err(StructureError::Asymmetric(u, v));
            }
            graph.add_edge(u, v);
        }
        Ok(RelationalStructure {
            size,
            relations,
            graph,
        })
    }

    /// The structure with universe `V(g)` and `E` the symmetric edge relation.
    /// Fails only for the empty graph.
    pub fn from_graph(g: &Graph) -> Result<Self, StructureError> {
        Self::from_graph_with(g, BTreeMap::new())
    }

    /// Like [`from_graph`](Self::from_graph) with extra relations.
    pub fn from_graph_with(g: &Graph, mut extra: BTreeMap<String, Relation>) -> Result<Self, StructureError> {
        let tuples = g.edges().flat_map(|(u, v)| [vec![u, v], vec![v, u]]).collect();
        if extra.insert(EDGE.to_string(), Relation { arity: 2, tuples }).is_some() {
            return Err(StructureError::DuplicateRelation(EDGE.to_string()));
        }
        Self::new(g.n(), extra)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn relations(&self) -> &BTreeMap<String, Relation> {
        &self.relations
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.get(name)
    }

    pub fn holds(&self, name: &str, tuple: &[usize]) -> bool {
        if name == EDGE && tuple.len() == 2 {
            return self.graph.has_edge(tuple[0], tuple[1]);
        }
        self.relations
            .get(name)
            .is_some_and(|r| r.tuples.contains(tuple))
    }

    pub fn signature(&self) -> Signature {
        self.relations
            .iter()
            .map(|(n, r)| (n.clone(), r.arity))
            .collect()
    }

    /// The substructure induced on `keep` (kept in the given order), or
    /// `None` if `keep` is empty.
    pub fn induced(&self, keep: &[Vertex]) -> Option<RelationalStructure> {
        let mut index = vec![usize::MAX; self.size];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let relations = self
            .relations
            .iter()
            .map(|(name, rel)| {
                let tuples = rel
                    .tuples
                    .iter()
                    .filter(|t| t.iter().all(|&e| index[e] != usize::MAX))
                    .map(|t| t.iter().map(|&e| index[e]).collect())
                    .collect();
                (name.clone(), Relation { arity: rel.arity, tuples })
            })
            .collect();
        RelationalStructure::new(keep.len(), relations).ok()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("universe {}\n", self.size);
        for (name, rel) in &self.relations {
            writeln!(out, "rel {name} {}", rel.arity).unwrap();
            for t in &rel.tuples {
                let line: Vec<String> = t.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", line.join(" ")).unwrap();
            }
        }
        out
    }
}

fn format_err(line: usize, message: impl Into<String>) -> StructureError {
    StructureError::Format {
        line,
        message: message.into(),
    }
}

impl FromStr for RelationalStructure {
    type Err = StructureError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = crate::graph::content_lines(text);
        let (line, header) = lines
            .next()
            .ok_or_else(|| format_err(1, "missing `universe n` header"))?;
        let size = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["universe", n] => n
                .parse()
                .map_err(|_| format_err(line, format!("bad universe size `{n}`")))?,
            _ => return Err(format_err(line, "expected `universe n`")),
        };
        let mut relations: BTreeMap<String, Relation> = BTreeMap::new();
        let mut current: Option<String> = None;
        for (line, body) in lines {
            let fields: Vec<&str> = body.split_whitespace().collect();
            if fields.first() == Some(&"rel") {
                let [_, name, arity] = fields[..] else {
                    return Err(format_err(line, "expected `rel NAME ARITY`"));
                };
                let arity = arity
                    .parse()
                    .map_err(|_| format_err(line, format!("bad arity `{arity}`")))?;
                if relations.contains_key(name) {
                    return Err(StructureError::DuplicateRelation(name.to_string()));
                }
                relations.insert(
                    name.to_string(),
                    Relation {
                        arity,
                        tuples: BTreeSet::new(),
                    },
                );
                current = Some(name.to_string());
                continue;
            }
            let name = current
                .as_ref()
                .ok_or_else(|| format_err(line, "tuple before any `rel` block"))?;
            let tuple = fields
                .iter()
                .map(|f| f.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| format_err(line, format!("bad tuple `{body}`")))?;
            let rel = relations.get_mut(name).unwrap();
            if tuple.len() != rel.arity {
                return Err(format_err(
                    line,
                    format!("tuple has {} entries, `{name}` has arity {}", tuple.len(), rel.arity),
                ));
            }
            rel.tuples.insert(tuple);
        }
        RelationalStructure::new(size, relations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(arity: usize, tuples: &[&[usize]]) -> Relation {
        Relation {
            arity,
            tuples: tuples.iter().map(|t| t.to_vec()).collect(),
        }
    }

    #[test]
    fn validates_edge_relation() {
        let ok = BTreeMap::from([("E".to_string(), rel(2, &[&[0, 1], &[1, 0]]))]);
        assert!(RelationalStructure::new(2, ok).is_ok());
        let asym = BTreeMap::from([("E".to_string(), rel(2, &[&[0, 1]]))]);
        assert_eq!(
            RelationalStructure::new(2, asym),
            Err(StructureError::Asymmetric(0, 1))
        );
        let refl = BTreeMap::from([("E".to_string(), rel(2, &[&[1, 1]]))]);
        assert_eq!(RelationalStructure::new(2, refl), Err(StructureError::Reflexive(1)));
        let none = BTreeMap::from([("R".to_string(), rel(1, &[&[0]]))]);
        assert_eq!(
            RelationalStructure::new(2, none),
            Err(StructureError::MissingEdgeRelation)
        );
        assert_eq!(
            RelationalStructure::new(0, BTreeMap::new()),
            Err(StructureError::EmptyUniverse)
        );
        let bad = BTreeMap::from([
            ("E".to_string(), rel(2, &[])),
            ("R".to_string(), rel(1, &[&[3]])),
        ]);
        assert!(matches!(
            RelationalStructure::new(2, bad),
            Err(StructureError::ElementOutOfRange { element: 3, .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        let text = "universe 3\n# root\nrel R 1\n0\nrel E 2\n0 1\n1 0\n1 2\n2 1\n";
        let s: RelationalStructure = text.parse().unwrap();
        assert_eq!(s.graph(), &Graph::path(3));
        assert!(s.holds("R", &[0]));
        assert_eq!(s.to_text().parse::<RelationalStructure>().unwrap(), s);
        assert_eq!(
            "universe 2\nrel R 1\n0\n".parse::<RelationalStructure>(),
            Err(StructureError::MissingEdgeRelation)
        );
    }

    #[test]
    fn induced_substructure() {
        let mut extra = BTreeMap::new();
        extra.insert("R".to_string(), rel(1, &[&[2]]));
        let s = RelationalStructure::from_graph_with(&Graph::cycle(4), extra).unwrap();
        let sub = s.induced(&[1, 2, 3]).unwrap();
        assert_eq!(sub.graph(), &Graph::path(3));
        assert!(sub.holds("R", &[1]));
        assert!(s.induced(&[]).is_none());
    }
}
