//! Brute-force graph oracles on a handful of small graphs.
//!
//! Run with `cargo run --example graph_oracles`.

use seplogic::graph::{
    disjoint_paths_exist, elimination_distance, is_bipartite, is_k_connected, is_planar, min_fvs_size,
};
use seplogic::Graph;

fn main() {
    let graphs = [
        ("P5", Graph::path(5)),
        ("C6", Graph::cycle(6)),
        ("2xC3", Graph::cycle(3).disjoint_union(&Graph::cycle(3))),
        ("K4", Graph::complete(4)),
        ("K5", Graph::complete(5)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
    ];
    let edgeless = |g: &Graph| g.edge_count() == 0;
    println!("{:<6} {:>4} {:>4} {:>6} {:>9} {:>7} {:>4} {:>11}", "graph", "n", "m", "cycle", "bipartite", "planar", "fvs", "ed");
    for (name, g) in &graphs {
        println!(
            "{name:<6} {:>4} {:>4} {:>6} {:>9} {:>7} {:>4} {:>11}",
            g.n(),
            g.edge_count(),
            g.has_cycle(),
            is_bipartite(g),
            is_planar(g),
            min_fvs_size(g),
            format!("{:?}", elimination_distance(g, &edgeless, 4)),
        );
    }

    let c4 = Graph::cycle(4);
    println!();
    println!("C4 minus 1: 0 ~ 2? {}", c4.connected_after_deletion(0, 2, &[1]).unwrap());
    println!("C4 minus 1, 3: 0 ~ 2? {}", c4.connected_after_deletion(0, 2, &[1, 3]).unwrap());
    println!("C4 linkage (0,2),(1,3): {}", disjoint_paths_exist(&c4, &[(0, 2), (1, 3)]).unwrap());
    println!("C4 linkage (0,2),(0,2): {}", disjoint_paths_exist(&c4, &[(0, 2), (0, 2)]).unwrap());
    for k in 1..=4 {
        println!("K4 is {k}-connected: {}", is_k_connected(&Graph::complete(4), k));
    }
}
