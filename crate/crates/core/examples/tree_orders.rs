//! Recovers the ancestor order of a rooted tree from `conn` atoms, and
//! `conn` atoms from the order.
//!
//! Run with `cargo run --example tree_orders`.

use seplogic::formulas::{conn_via_order, tree_order_via_conn};
use seplogic::random::{random_rooted_tree, rng};
use seplogic::{evaluate, print, Assignment, Formula};

fn main() {
    let order = tree_order_via_conn("x", "y");
    let back = conn_via_order("x", "y", &["z"]);
    println!("x < y    := {}", print(&order));
    println!("conn_1   := {}", print(&back));

    let tree = random_rooted_tree(&mut rng(11), 12);
    let s = tree.structure();
    let at = |f: &Formula, values: &[(&str, usize)]| -> bool {
        let a: Assignment = values.iter().copied().collect();
        evaluate(&s, f, &a).unwrap()
    };
    let (mut pairs, mut wrong) = (0, 0);
    for x in 0..12 {
        for y in 0..12 {
            pairs += 1;
            wrong += usize::from(at(&order, &[("x", x), ("y", y)]) != (x != y && tree.is_ancestor(x, y)));
            for z in 0..12 {
                let deleted = z == x || z == y;
                let expected = !deleted && s.graph().connected_after_deletion(x, y, &[z]).unwrap();
                wrong += usize::from(at(&back, &[("x", x), ("y", y), ("z", z)]) != expected);
            }
        }
    }
    println!("random tree on 12 vertices: {pairs} pairs checked, {wrong} disagreements");
}
