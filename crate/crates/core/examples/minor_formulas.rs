//! Topological expansion families, minor formulas and the planarity
//! sentence.
//!
//! Run with `cargo run --example minor_formulas`.

use std::time::Instant;

use seplogic::families::gen_planarity_pair;
use seplogic::formulas::{minor_formula, planarity_formula, topological_expansion_family};
use seplogic::graph::{is_minor, is_planar};
use seplogic::{evaluate_sentence, Graph, RelationalStructure};

fn main() {
    for (name, h) in [("K3", Graph::complete(3)), ("K4", Graph::complete(4)), ("C4", Graph::cycle(4)), ("K5", Graph::complete(5)), ("K3,3", Graph::complete_bipartite(3, 3))] {
        let family = topological_expansion_family(&h);
        let sizes: Vec<(usize, usize)> = family.iter().map(|g| (g.n(), g.edge_count())).collect();
        println!("{name:<5} {} expansions, (n, m): {sizes:?}", family.len());
    }
    println!();

    let (ladder, mobius) = gen_planarity_pair(1);
    let graphs = [
        ("C6", Graph::cycle(6)),
        ("K4", Graph::complete(4)),
        ("K5", Graph::complete(5)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("ladder", ladder),
        ("Moebius", mobius),
    ];
    let k4_minor = minor_formula(&Graph::complete(4));
    let planar = planarity_formula();
    println!("planarity sentence: rank {}, {}", planar.quantifier_rank(), planar.fragment());
    for (name, g) in &graphs {
        let s = RelationalStructure::from_graph(g).unwrap();
        let start = Instant::now();
        let has_k4 = evaluate_sentence(&s, &k4_minor).unwrap();
        let is_planar_formula = evaluate_sentence(&s, &planar).unwrap();
        println!(
            "{name:<8} K4 minor {has_k4:<5} (oracle {:<5})  planar {is_planar_formula:<5} (oracle {:<5})  {:.2?}",
            is_minor(&Graph::complete(4), g),
            is_planar(g),
            start.elapsed()
        );
    }
}
