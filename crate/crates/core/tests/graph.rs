mod common;

use proptest::prelude::*;

use common::PathTable;
use seplogic::families::gen_planarity_pair;
use seplogic::graph::iso::{all_graphs, are_isomorphic};
use seplogic::graph::{
    disjoint_paths_exist, elimination_distance, is_bipartite, is_k_connected, is_minor, is_planar,
    is_topological_minor, min_fvs_size, EliminationDistance,
};
use seplogic::{Graph, GraphError};

fn two_triangles() -> Graph {
    Graph::cycle(3).disjoint_union(&Graph::cycle(3))
}

/// Random graph on `1..=max_n` vertices from an edge bitmask.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut bits = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if bits.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

#[test]
fn construction_rejects_loops_and_out_of_range() {
    assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
    assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    assert_eq!(Graph::from_edges(3, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
    let mut g = Graph::empty(3);
    g.add_edge(2, 0);
    assert!(g.has_edge(0, 2));
    assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2)]);
}

#[test]
fn text_format_round_trips() {
    let g = two_triangles();
    let back: Graph = g.to_text().parse().unwrap();
    assert_eq!(back, g);
    let with_comments: Graph = "# a path\n3 2\n\n0 1\n1 2\n".parse().unwrap();
    assert_eq!(with_comments, Graph::path(3));
    assert!("3 2\n0 1\n".parse::<Graph>().is_err());
    assert!(matches!("2 1\n0 5\n".parse::<Graph>(), Err(GraphError::Format { line: 2, .. })));
}

#[test]
fn connectivity_after_deletion() {
    let p3 = Graph::path(3);
    assert!(p3.connected_after_deletion(0, 2, &[]).unwrap());
    assert!(!p3.connected_after_deletion(0, 2, &[1]).unwrap());
    assert!(!p3.connected_after_deletion(0, 2, &[0]).unwrap());
    assert!(Graph::cycle(4).connected_after_deletion(0, 2, &[1]).unwrap());
    assert!(p3.connected_after_deletion(1, 1, &[0]).unwrap());
    assert!(!p3.connected_after_deletion(1, 1, &[1]).unwrap());
    assert!(p3.connected_after_deletion(0, 3, &[]).is_err());
}

#[test]
fn k_connectivity_examples() {
    assert!(is_k_connected(&Graph::complete(4), 3));
    assert!(!is_k_connected(&Graph::path(3), 2));
}

#[test]
fn disjoint_paths_examples() {
    assert!(disjoint_paths_exist(&Graph::complete(4), &[(0, 1), (2, 3)]).unwrap());
    for x in 0..5 {
        assert!(disjoint_paths_exist(&Graph::empty(5), &[(x, x)]).unwrap());
    }
    assert!(!disjoint_paths_exist(&Graph::cycle(4), &[(0, 2), (1, 3)]).unwrap());
    // two internally disjoint routes between opposite corners of C4
    assert!(disjoint_paths_exist(&Graph::cycle(4), &[(0, 2), (0, 2)]).unwrap());
    assert!(!disjoint_paths_exist(&Graph::cycle(4), &[(0, 2), (0, 2), (0, 2)]).unwrap());
    // (1, 1) blocks the route through 1
    assert!(!disjoint_paths_exist(&Graph::path(3), &[(0, 2), (1, 1)]).unwrap());
    assert!(disjoint_paths_exist(&Graph::path(2), &[(0, 1), (0, 1)]).unwrap());
    assert!(matches!(disjoint_paths_exist(&Graph::path(2), &[]), Err(GraphError::NoPairs)));
}

#[test]
fn cycles_and_bipartiteness() {
    assert!(Graph::cycle(3).has_cycle());
    assert!(!Graph::path(3).has_cycle());
    assert!(two_triangles().has_cycle());
    assert!(is_bipartite(&Graph::cycle(8)));
    assert!(!is_bipartite(&Graph::cycle(9)));
    assert!(is_bipartite(&Graph::empty(4)));
}

#[test]
fn minors_and_planarity() {
    let (ladder, mobius) = gen_planarity_pair(1);
    assert!(is_topological_minor(&Graph::cycle(3), &Graph::cycle(5)));
    assert!(!is_topological_minor(&Graph::complete(4), &Graph::cycle(5)));
    assert!(!is_topological_minor(&Graph::complete(5), &ladder));
    assert!(is_minor(&Graph::cycle(3), &Graph::cycle(6)));
    assert!(is_minor(&Graph::complete(5), &Graph::complete(6)));
    assert!(!is_minor(&Graph::complete(5), &mobius));
    assert!(is_minor(&Graph::complete_bipartite(3, 3), &mobius));
    assert!(is_planar(&Graph::complete(4)));
    assert!(!is_planar(&Graph::complete(5)));
    assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
    assert!(!is_planar(&mobius));
    assert!(is_planar(&ladder));
}

#[test]
fn feedback_vertex_sets() {
    assert_eq!(min_fvs_size(&Graph::path(5)), 0);
    assert_eq!(min_fvs_size(&Graph::cycle(4)), 1);
    assert_eq!(min_fvs_size(&two_triangles()), 2);
}

#[test]
fn elimination_distance_to_edgeless() {
    let edgeless = |g: &Graph| g.edge_count() == 0;
    let ed = |g: &Graph| elimination_distance(g, &edgeless, 4);
    assert_eq!(ed(&Graph::empty(1)), EliminationDistance::Exactly(0));
    assert_eq!(ed(&Graph::path(3)), EliminationDistance::Exactly(1));
    assert_eq!(ed(&Graph::cycle(4)), EliminationDistance::Exactly(2));
    assert_eq!(elimination_distance(&Graph::cycle(4), &edgeless, 1), EliminationDistance::ExceedsBudget);
}

#[test]
fn named_graphs() {
    assert_eq!(Graph::named("K4"), Some(Graph::complete(4)));
    assert_eq!(Graph::named("K3,3"), Some(Graph::complete_bipartite(3, 3)));
    assert_eq!(Graph::named("C5"), Some(Graph::cycle(5)));
    assert_eq!(Graph::named("P2"), Some(Graph::path(2)));
    assert_eq!(Graph::named("C2"), None);
    assert_eq!(Graph::named("X"), None);
}

#[test]
fn graph_enumeration_is_up_to_isomorphism() {
    let graphs = all_graphs(4);
    assert_eq!(graphs.len(), 11);
    for (i, a) in graphs.iter().enumerate() {
        for b in &graphs[i + 1..] {
            assert!(!are_isomorphic(a, b));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn connectivity_is_an_equivalence(g in graph(12)) {
        let n = g.n();
        let c = |u, v| g.connected_after_deletion(u, v, &[]).unwrap();
        for u in 0..n {
            prop_assert!(c(u, u));
            for v in 0..n {
                prop_assert_eq!(c(u, v), c(v, u));
                for w in 0..n {
                    if c(u, v) && c(v, w) {
                        prop_assert!(c(u, w));
                    }
                }
            }
        }
    }

    #[test]
    fn deleting_more_never_reconnects(g in graph(9), picks in proptest::collection::vec(any::<usize>(), 4)) {
        let n = g.n();
        let (u, v) = (picks[0] % n, picks[1] % n);
        let small = [picks[2] % n];
        let large = [picks[2] % n, picks[3] % n];
        if !g.connected_after_deletion(u, v, &small).unwrap() {
            prop_assert!(!g.connected_after_deletion(u, v, &large).unwrap());
        }
    }

    #[test]
    fn deletion_matches_the_induced_subgraph(g in graph(9), picks in proptest::collection::vec(any::<usize>(), 4)) {
        let n = g.n();
        let deleted = [picks[2] % n, picks[3] % n];
        let (u, v) = (picks[0] % n, picks[1] % n);
        let keep: Vec<usize> = (0..n).filter(|x| !deleted.contains(x)).collect();
        let h = g.induced(&keep);
        let expected = match (keep.iter().position(|&x| x == u), keep.iter().position(|&x| x == v)) {
            (Some(a), Some(b)) => h.components().iter().any(|c| c.contains(&a) && c.contains(&b)),
            _ => false,
        };
        prop_assert_eq!(g.connected_after_deletion(u, v, &deleted).unwrap(), expected);
    }

    #[test]
    fn a_single_pair_is_plain_connectivity(g in graph(9), a in any::<usize>(), b in any::<usize>()) {
        let (u, v) = (a % g.n(), b % g.n());
        prop_assert_eq!(
            disjoint_paths_exist(&g, &[(u, v)]).unwrap(),
            g.connected_after_deletion(u, v, &[]).unwrap()
        );
    }

    #[test]
    fn disjoint_paths_agree_with_path_enumeration(
        g in graph(7),
        ends in proptest::collection::vec(any::<usize>(), 2..=6),
    ) {
        let n = g.n();
        let pairs: Vec<(usize, usize)> = ends.chunks(2).filter(|c| c.len() == 2).map(|c| (c[0] % n, c[1] % n)).collect();
        prop_assert_eq!(disjoint_paths_exist(&g, &pairs).unwrap(), PathTable::new(&g).linkable(&pairs));
    }

    #[test]
    fn dropping_a_pair_keeps_a_linkage(g in graph(7), ends in proptest::collection::vec(any::<usize>(), 6)) {
        let n = g.n();
        let pairs: Vec<(usize, usize)> = ends.chunks(2).map(|c| (c[0] % n, c[1] % n)).collect();
        if disjoint_paths_exist(&g, &pairs).unwrap() {
            prop_assert!(disjoint_paths_exist(&g, &pairs[..2]).unwrap());
        }
    }

    #[test]
    fn topological_minors_are_minors(h in graph(4), g in graph(8)) {
        if is_topological_minor(&h, &g) {
            prop_assert!(is_minor(&h, &g));
        }
    }

    #[test]
    fn k_connectivity_is_monotone(g in graph(8), k in 0usize..5) {
        if is_k_connected(&g, k + 1) {
            prop_assert!(is_k_connected(&g, k));
        }
    }

    #[test]
    fn oracles_ignore_labels(g in graph(7), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut seplogic::random::rng(seed));
        let h = g.relabel(&perm);
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert_eq!(is_planar(&g), is_planar(&h));
        prop_assert_eq!(min_fvs_size(&g), min_fvs_size(&h));
        prop_assert_eq!(is_k_connected(&g, 2), is_k_connected(&h, 2));
    }

    #[test]
    fn planar_graphs_are_sparse(g in graph(7)) {
        if g.n() >= 3 && is_planar(&g) {
            prop_assert!(g.edge_count() <= 3 * g.n() - 6);
        }
    }
}
