//! Generates the graph pairs behind the inexpressibility results and shows
//! which side a property separates them on.
//!
//! Run with `cargo run --example separating_families`.

use seplogic::families::{generate, FAMILIES};
use seplogic::graph::{is_bipartite, is_k_connected, is_planar};
use seplogic::Graph;

fn describe(g: &Graph) -> String {
    format!("n {:>3}, m {:>4}, components {}", g.n(), g.edge_count(), g.components().len())
}

fn main() {
    for name in FAMILIES {
        let q = if *name == "bipartite-pair" { 3 } else { 1 };
        let (a, b) = generate(name, q, None).unwrap();
        println!("{name} (q = {q})");
        println!("  A: {}", describe(&a));
        println!("  B: {}", describe(&b));
        match *name {
            "planarity-pair" => println!("  planar: A {}, B {}", is_planar(&a), is_planar(&b)),
            "apex-clique-pair" => println!("  3-connected: A {}, B {}", is_k_connected(&a, 3), is_k_connected(&b, 3)),
            "bipartite-pair" => println!("  bipartite: A {}, B {}", is_bipartite(&a), is_bipartite(&b)),
            _ => {
                let apex = a.n() - 2..a.n();
                let keep_a: Vec<usize> = (0..a.n()).filter(|v| !apex.contains(v)).collect();
                let keep_b: Vec<usize> = (0..b.n()).filter(|v| !apex.contains(v)).collect();
                println!(
                    "  without the apex blob: A {} components, B {} components",
                    a.induced(&keep_a).components().len(),
                    b.induced(&keep_b).components().len()
                );
            }
        }
    }
    println!();
    println!("{}", generate("grid", 1, None).unwrap_err());
}
