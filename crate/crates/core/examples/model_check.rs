//! Model checks separator and disjoint-paths sentences on small graphs.
//!
//! Run with `cargo run --example model_check`.

use std::time::Instant;

use seplogic::eval::estimated_cost;
use seplogic::random::{random_graph, rng};
use seplogic::{evaluate, parse, Assignment, Evaluator, Graph, RelationalStructure};

fn main() {
    let sentences = [
        ("connected", "forall x. forall y. conn(x, y |)"),
        ("2-connected", "forall z. forall x. forall y. x = z | y = z | conn(x, y | z)"),
        ("has a cycle", "exists x. exists y. E(x, y) & exists z. conn(z, x | y) & conn(z, y | x)"),
        ("two crossing linkages", "exists a. exists b. exists c. exists d. a != b & a != c & a != d & b != c & b != d & c != d & dp[(a, b), (c, d)]"),
    ];
    let graphs = [
        ("P4", Graph::path(4)),
        ("C6", Graph::cycle(6)),
        ("K4", Graph::complete(4)),
        ("G(20, 0.2)", random_graph(&mut rng(1), 20, 0.2)),
    ];
    for (gname, g) in &graphs {
        let s = RelationalStructure::from_graph(g).unwrap();
        let mut ev = Evaluator::new(&s);
        for (fname, text) in sentences {
            let f = parse(text).unwrap();
            let start = Instant::now();
            let value = ev.evaluate(&f, &Assignment::new()).unwrap();
            println!(
                "{gname:<11} {fname:<22} {value:<5}  cost estimate {:.1e}  ({:.2?})",
                estimated_cost(&s, &f),
                start.elapsed()
            );
        }
    }

    let s = RelationalStructure::from_graph(&Graph::cycle(6)).unwrap();
    let f = parse("conn(x, y | z, w)").unwrap();
    let a = Assignment::new().with("x", 0).with("y", 3).with("z", 1).with("w", 5);
    println!("\nC6: conn(0, 3 | 1, 5) = {}", evaluate(&s, &f, &a).unwrap());
    let missing = evaluate(&s, &f, &Assignment::new().with("x", 0));
    println!("without bindings: {}", missing.unwrap_err());
}
