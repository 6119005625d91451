//! Relativises formulas to `G - z` and to the component of `x`, and checks
//! the results against the induced subgraphs.
//!
//! Run with `cargo run --example relativization`.

use seplogic::logic::{comp_relativize, del_relativize};
use seplogic::{evaluate, evaluate_sentence, parse, print, Assignment, Graph, RelationalStructure};

fn main() {
    let connected = parse("forall x. forall y. conn(x, y |)").unwrap();
    let del = del_relativize("z", &connected).unwrap();
    println!("del(z)[connected] = {}", print(&del));

    let g = Graph::path(5);
    let s = RelationalStructure::from_graph(&g).unwrap();
    for z in 0..g.n() {
        let direct = evaluate(&s, &del, &Assignment::new().with("z", z)).unwrap();
        let keep: Vec<usize> = (0..g.n()).filter(|&v| v != z).collect();
        let induced = RelationalStructure::from_graph(&g.induced(&keep)).unwrap();
        let expected = evaluate_sentence(&induced, &connected).unwrap();
        println!("P5 - {z}: relativised {direct:<5} induced {expected}");
    }

    let has_triangle = parse("exists a. exists b. exists c. E(a, b) & E(b, c) & E(a, c)").unwrap();
    let comp = comp_relativize("x", &has_triangle).unwrap();
    println!("\ncomp(x)[triangle] = {}", print(&comp));
    let g = Graph::cycle(3).disjoint_union(&Graph::path(3));
    let s = RelationalStructure::from_graph(&g).unwrap();
    for x in 0..g.n() {
        let value = evaluate(&s, &comp, &Assignment::new().with("x", x)).unwrap();
        println!("K3 + P3, component of {x} has a triangle: {value}");
    }
}
