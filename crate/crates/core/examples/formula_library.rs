//! Builds every library formula, prints its size and fragment, and checks
//! the graph-property formulas against their oracles on small graphs.
//!
//! Run with `cargo run --example formula_library`.

use seplogic::formulas::{self, build, LIBRARY};
use seplogic::graph::iso::all_graphs;
use seplogic::graph::{elimination_distance, is_k_connected, min_fvs_size, EliminationDistance};
use seplogic::{evaluate_sentence, print, Formula, Graph, RelationalStructure};

fn agreement(name: &str, f: &Formula, oracle: impl Fn(&Graph) -> bool) {
    let (mut checked, mut wrong) = (0, 0);
    for n in 1..=5 {
        for g in all_graphs(n) {
            let s = RelationalStructure::from_graph(&g).unwrap();
            checked += 1;
            if evaluate_sentence(&s, f).unwrap() != oracle(&g) {
                wrong += 1;
            }
        }
    }
    println!("{name:<16} {checked} graphs, {wrong} disagreements");
}

fn main() {
    for (name, usage) in LIBRARY {
        let params: [&[&str]; 3] = [&[], &["1"], &["K4"]];
        match params.iter().find_map(|p| build(name, p).ok()) {
            Some(f) => println!(
                "{name:<22} rank {:>2}  {:<11} {:>6} chars",
                f.quantifier_rank(),
                f.fragment().to_string(),
                print(&f).len()
            ),
            None => println!("{name:<22} usage: {usage}"),
        }
    }
    println!();

    let edgeless = |g: &Graph| g.edge_count() == 0;
    agreement("connectivity", &formulas::connectivity(), |g| g.is_connected());
    agreement("2-connectivity", &formulas::k_connectivity(1), |g| g.n() <= 2 || is_k_connected(g, 2));
    agreement("acyclic", &formulas::acyclic(), |g| !g.has_cycle());
    agreement("fvs <= 1", &formulas::fvs(1), |g| min_fvs_size(g) <= 1);
    let ed1 = formulas::elimination_distance(1, &formulas::edgeless()).unwrap();
    agreement("ed <= 1", &ed1, |g| matches!(elimination_distance(g, &edgeless, 1), EliminationDistance::Exactly(_)));
}
