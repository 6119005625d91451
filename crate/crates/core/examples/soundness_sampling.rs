//! Samples random sentences of each game's fragment and checks that they
//! never separate structures on which Duplicator wins.
//!
//! Run with `cargo run --example soundness_sampling`.

use seplogic::families::gen_bipartite_pair;
use seplogic::games::{sample_soundness, GameConfig, Variant};
use seplogic::{print, Graph, RelationalStructure};

fn main() {
    let two_c3 = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
    let (c8, c9) = gen_bipartite_pair(3);
    let cases = [
        ("C6 vs 2xC3", Graph::cycle(6), two_c3.clone(), Variant::Plain, 2),
        ("C6 vs 2xC3", Graph::cycle(6), two_c3, Variant::Conn(0), 2),
        ("C8 vs C9", c8.clone(), c9.clone(), Variant::Conn(1), 2),
        ("C8 vs C9", c8, c9, Variant::Dp(1), 2),
        ("K4 vs C4", Graph::complete(4), Graph::cycle(4), Variant::Plain, 2),
    ];
    for (label, a, b, variant, q) in cases {
        let (a, b) = (RelationalStructure::from_graph(&a).unwrap(), RelationalStructure::from_graph(&b).unwrap());
        let report = sample_soundness(&a, &b, &GameConfig::new(q, variant), 500, q, 42).unwrap();
        println!(
            "{label:<11} {variant:<7} q={q}: {:<10} {} samples, {} disagreements",
            report.winner.to_string(),
            report.samples,
            report.disagreements.len()
        );
        if let Some(f) = report.distinguishing {
            println!("    separated by {}", print(&f));
        }
    }
}
