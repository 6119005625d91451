//! Solves a few Ehrenfeucht–Fraïssé games and prints the winners.
//!
//! Run with `cargo run --example ef_games`.

use std::time::Instant;

use seplogic::families::{gen_bipartite_pair, gen_dp_pair, gen_planarity_pair, planarity_pins};
use seplogic::games::{solve, verify_strategy, GameConfig, Variant};
use seplogic::{Graph, RelationalStructure};

fn structure(g: &Graph) -> RelationalStructure {
    RelationalStructure::from_graph(g).unwrap()
}

fn play(label: &str, a: &Graph, b: &Graph, cfg: GameConfig) {
    let (a, b) = (structure(a), structure(b));
    let start = Instant::now();
    let result = solve(&a, &b, &cfg).unwrap();
    let verified = result
        .strategy
        .as_ref()
        .map(|s| verify_strategy(&a, &b, &cfg, result.winner, s));
    println!(
        "{label:<40} {:<10} positions {:>7}  strategy verified: {:?}  ({:.2?})",
        result.winner.to_string(),
        result.positions,
        verified,
        start.elapsed()
    );
}

fn main() {
    let c6 = Graph::cycle(6);
    let two_c3 = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
    play("C6 vs 2xC3, plain, q=2", &c6, &two_c3, GameConfig::new(2, Variant::Plain).with_strategy());
    play("C6 vs 2xC3, conn:0, q=2", &c6, &two_c3, GameConfig::new(2, Variant::Conn(0)).with_strategy());

    let (c8, c9) = gen_bipartite_pair(3);
    play("C8 vs C9, dp:1, q=3", &c8, &c9, GameConfig::new(3, Variant::Dp(1)).with_strategy());

    let (g, h) = gen_planarity_pair(1);
    let pinned = GameConfig::new(1, Variant::Conn(1)).pinned(planarity_pins(1)).with_strategy();
    play("ladders, conn:1, q=1, four pins", &g, &h, pinned);
    play("ladders, plain, q=2", &g, &h, GameConfig::new(2, Variant::Plain).with_strategy());

    let (g, h) = gen_dp_pair(2, 1);
    play("dp pair q=2 k=1, dp:1, q=2", &g, &h, GameConfig::new(2, Variant::Dp(1)));
}
