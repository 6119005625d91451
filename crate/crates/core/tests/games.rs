mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::seq::SliceRandom;

use common::structure;
use seplogic::games::{
    check_winning_condition, sample_soundness, solve, verify_strategy, GameConfig, GameError, Player, Variant,
};
use seplogic::random::rng;
use seplogic::structure::Relation;
use seplogic::{formulas, Graph, RelationalStructure};

const VARIANTS: [Variant; 5] = [Variant::Plain, Variant::Conn(0), Variant::Conn(2), Variant::Dp(1), Variant::Dp(3)];

fn winner(a: &Graph, b: &Graph, q: usize, variant: Variant) -> Player {
    solve(&structure(a), &structure(b), &GameConfig::new(q, variant)).unwrap().winner
}

fn two_triangles() -> Graph {
    Graph::cycle(3).disjoint_union(&Graph::cycle(3))
}

#[test]
fn identical_edges() {
    for v in VARIANTS {
        assert_eq!(winner(&Graph::complete(2), &Graph::complete(2), 3, v), Player::Duplicator);
    }
}

#[test]
fn edge_against_two_isolated_vertices() {
    assert_eq!(winner(&Graph::path(2), &Graph::empty(2), 2, Variant::Plain), Player::Spoiler);
    assert_eq!(winner(&Graph::path(2), &Graph::empty(2), 1, Variant::Plain), Player::Duplicator);
    assert_eq!(winner(&Graph::path(2), &Graph::empty(2), 1, Variant::Conn(0)), Player::Duplicator);
}

#[test]
fn hexagon_against_two_triangles() {
    let (c6, tt) = (Graph::cycle(6), two_triangles());
    assert_eq!(winner(&c6, &tt, 2, Variant::Plain), Player::Duplicator);
    // a triangle needs three pebbles
    assert_eq!(winner(&c6, &tt, 3, Variant::Plain), Player::Spoiler);
    assert_eq!(winner(&c6, &tt, 2, Variant::Conn(0)), Player::Spoiler);
    assert_eq!(winner(&c6, &tt, 1, Variant::Conn(0)), Player::Duplicator);
    assert_eq!(winner(&c6, &tt, 2, Variant::Dp(1)), Player::Spoiler);
}

#[test]
fn even_and_odd_cycles() {
    let (c8, c9) = (Graph::cycle(8), Graph::cycle(9));
    for v in [Variant::Plain, Variant::Conn(1), Variant::Dp(1)] {
        assert_eq!(winner(&c8, &c9, 2, v), Player::Duplicator, "{v}");
    }
    assert_eq!(winner(&c8, &c9, 4, Variant::Plain), Player::Spoiler);
}

#[test]
fn winning_condition() {
    let (c6, tt) = (structure(&Graph::cycle(6)), structure(&two_triangles()));
    for v in VARIANTS {
        assert!(check_winning_condition(&c6, &tt, &[], v));
    }
    let (edge, non_edge) = (structure(&Graph::path(2)), structure(&Graph::empty(2)));
    assert!(!check_winning_condition(&edge, &non_edge, &[(0, 0), (1, 1)], Variant::Plain));
    assert!(check_winning_condition(&edge, &non_edge, &[(0, 1), (0, 1)], Variant::Plain));
    // 0 and 3 are connected in C6 but in different triangles of 2C3
    assert!(check_winning_condition(&c6, &tt, &[(0, 0), (3, 3)], Variant::Plain));
    assert!(!check_winning_condition(&c6, &tt, &[(0, 0), (3, 3)], Variant::Conn(0)));
    // 0 and 2 stay connected after deleting 1 in C4 only
    let (c4, p4) = (structure(&Graph::cycle(4)), structure(&Graph::path(4)));
    let pebbles = [(0, 0), (1, 1), (2, 2)];
    assert!(check_winning_condition(&c4, &p4, &pebbles, Variant::Conn(0)));
    assert!(!check_winning_condition(&c4, &p4, &pebbles, Variant::Conn(1)));
    assert!(!check_winning_condition(&c4, &p4, &pebbles, Variant::Dp(2)));
}

#[test]
fn sampled_sentences_respect_the_winner() {
    let k4 = structure(&Graph::complete(4));
    let report = sample_soundness(&k4, &k4, &GameConfig::new(2, Variant::Dp(2)), 200, 2, 1).unwrap();
    assert_eq!(report.winner, Player::Duplicator);
    assert_eq!(report.samples, 200);
    assert!(report.is_sound());

    let (c6, tt) = (structure(&Graph::cycle(6)), structure(&two_triangles()));
    let cfg = GameConfig::new(2, Variant::Conn(0));
    let report = sample_soundness(&c6, &tt, &cfg, 2000, 2, 5).unwrap();
    assert_eq!(report.winner, Player::Spoiler);
    assert!(report.is_sound());
    let f = report.distinguishing.expect("some sampled sentence separates the graphs");
    assert!(f.quantifier_rank() <= 2);
    assert!(f.fragment() <= formulas::connectivity().fragment());
    let in_c6 = seplogic::evaluate_sentence(&c6, &f).unwrap();
    assert_ne!(in_c6, seplogic::evaluate_sentence(&tt, &f).unwrap());
}

#[test]
fn pinned_pairs() {
    let p4 = structure(&Graph::path(4));
    let endpoints = GameConfig::new(1, Variant::Plain).pinned(vec![(0, 3)]);
    assert_eq!(solve(&p4, &p4, &endpoints).unwrap().winner, Player::Duplicator);
    let end_and_middle = GameConfig::new(1, Variant::Plain).pinned(vec![(0, 1)]);
    assert_eq!(solve(&p4, &p4, &end_and_middle).unwrap().winner, Player::Duplicator);
    let end_and_middle = GameConfig::new(2, Variant::Plain).pinned(vec![(0, 1)]);
    assert_eq!(solve(&p4, &p4, &end_and_middle).unwrap().winner, Player::Spoiler);
    let broken = GameConfig::new(0, Variant::Plain).pinned(vec![(0, 0), (1, 2)]);
    assert_eq!(solve(&p4, &p4, &broken).unwrap().winner, Player::Spoiler);
}

#[test]
fn errors() {
    let (a, b) = (structure(&Graph::complete(5)), structure(&Graph::complete(6)));
    assert!(matches!(solve(&a, &b, &GameConfig::new(12, Variant::Plain)), Err(GameError::Budget { .. })));
    assert!(solve(&a, &b, &GameConfig::new(3, Variant::Plain).budget(10.0)).is_err());
    let pinned = GameConfig::new(1, Variant::Plain).pinned(vec![(5, 0)]);
    assert!(matches!(solve(&a, &b, &pinned), Err(GameError::PinnedOutOfRange { a: 5, .. })));
    let mut relations = BTreeMap::new();
    relations.insert("E".to_string(), Relation { arity: 2, tuples: Default::default() });
    relations.insert("P".to_string(), Relation { arity: 1, tuples: Default::default() });
    let with_p = RelationalStructure::new(5, relations).unwrap();
    assert_eq!(solve(&a, &with_p, &GameConfig::new(1, Variant::Plain)), Err(GameError::SignatureMismatch));
    assert!(!check_winning_condition(&a, &with_p, &[], Variant::Plain));
}

#[test]
fn variant_names() {
    for v in VARIANTS {
        assert_eq!(v.to_string().parse::<Variant>(), Ok(v));
    }
    assert_eq!("conn:1".parse::<Variant>(), Ok(Variant::Conn(1)));
    for bad in ["dp:0", "conn", "conn:x", "fo", "dp:-1"] {
        assert!(matches!(bad.parse::<Variant>(), Err(GameError::BadVariant(_))), "{bad}");
    }
}

#[test]
fn strategies_replay() {
    let cases = [
        (Graph::cycle(6), two_triangles(), 2, Variant::Conn(0)),
        (Graph::cycle(6), two_triangles(), 2, Variant::Plain),
        (Graph::path(2), Graph::empty(2), 2, Variant::Plain),
        (Graph::cycle(4), Graph::path(4), 2, Variant::Dp(1)),
    ];
    for (a, b, q, v) in cases {
        let (a, b) = (structure(&a), structure(&b));
        let cfg = GameConfig::new(q, v).with_strategy();
        let result = solve(&a, &b, &cfg).unwrap();
        let strategy = result.strategy.expect("small games yield a strategy");
        assert!(verify_strategy(&a, &b, &cfg, result.winner, &strategy));
        let loser = match result.winner {
            Player::Spoiler => Player::Duplicator,
            Player::Duplicator => Player::Spoiler,
        };
        assert!(!verify_strategy(&a, &b, &cfg, loser, &strategy));
        assert!(!strategy.render().is_empty());
    }
}

/// Rank-`q` FO over the empty signature plus equality: two sets are
/// indistinguishable iff they have equal size or both have at least `q`
/// elements.
fn sets_agree(m: usize, n: usize, q: usize) -> bool {
    m == n || (m >= q && n >= q)
}

#[test]
fn counting_games_on_cliques_and_independent_sets() {
    for q in 0..=4 {
        for m in 1..=5 {
            for n in 1..=5 {
                let expected = if sets_agree(m, n, q) { Player::Duplicator } else { Player::Spoiler };
                assert_eq!(winner(&Graph::empty(m), &Graph::empty(n), q, Variant::Plain), expected);
                assert_eq!(winner(&Graph::empty(m), &Graph::empty(n), q, Variant::Conn(1)), expected);
                assert_eq!(winner(&Graph::complete(m), &Graph::complete(n), q, Variant::Plain), expected);
            }
        }
    }
}

/// Small graph from an edge bitmask.
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

fn variant() -> impl Strategy<Value = Variant> {
    prop_oneof![Just(Variant::Plain), (0usize..=1).prop_map(Variant::Conn), (1usize..=2).prop_map(Variant::Dp)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn solving_is_deterministic(a in graph(5), b in graph(5), q in 0usize..=3, v in variant()) {
        prop_assert_eq!(winner(&a, &b, q, v), winner(&a, &b, q, v));
    }

    #[test]
    fn spoiler_wins_persist_with_more_rounds(a in graph(5), b in graph(5), q in 0usize..=2, v in variant()) {
        if winner(&a, &b, q, v) == Player::Spoiler {
            prop_assert_eq!(winner(&a, &b, q + 1, v), Player::Spoiler);
        }
    }

    #[test]
    fn richer_variants_help_spoiler(a in graph(5), b in graph(5), q in 0usize..=3) {
        if winner(&a, &b, q, Variant::Plain) == Player::Spoiler {
            prop_assert_eq!(winner(&a, &b, q, Variant::Conn(0)), Player::Spoiler);
            prop_assert_eq!(winner(&a, &b, q, Variant::Dp(1)), Player::Spoiler);
        }
        if winner(&a, &b, q, Variant::Conn(0)) == Player::Spoiler {
            prop_assert_eq!(winner(&a, &b, q, Variant::Conn(1)), Player::Spoiler);
        }
        if winner(&a, &b, q, Variant::Dp(1)) == Player::Spoiler {
            prop_assert_eq!(winner(&a, &b, q, Variant::Dp(2)), Player::Spoiler);
        }
    }

    #[test]
    fn isomorphic_graphs_are_indistinguishable(g in graph(6), seed in any::<u64>(), q in 0usize..=3, v in variant()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng(seed));
        prop_assert_eq!(winner(&g, &g.relabel(&perm), q, v), Player::Duplicator);
    }

    #[test]
    fn the_game_is_symmetric(a in graph(5), b in graph(5), q in 0usize..=3, v in variant()) {
        prop_assert_eq!(winner(&a, &b, q, v), winner(&b, &a, q, v));
    }
}
