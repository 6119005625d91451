//! Parses formulas in the concrete syntax, reports their analyses and
//! prints them back.
//!
//! Run with `cargo run --example parse_and_print`.

use seplogic::syntax::validate_sentence;
use seplogic::{parse, print};

fn main() {
    let inputs = [
        "forall x. forall y. conn(x, y |)",
        "∀x. ∃y. ¬(x = y) ∧ E(x, y)",
        "exists a. exists b. exists c. exists d. a != b & c != d & dp[(a, b), (c, d)]",
        "forall x. x < y -> conn(x, y | z)",
        "exists x. exists x. E(x, x)",
        "exists x. E(x, x) &",
    ];
    for text in inputs {
        println!("input:    {text}");
        match parse(text) {
            Ok(f) => {
                println!("printed:  {}", print(&f));
                println!("rank {}, fragment {}, free {:?}", f.quantifier_rank(), f.fragment(), f.free_variables());
                match validate_sentence(&f, None) {
                    Ok(()) => println!("a valid sentence"),
                    Err(problems) => println!("not a sentence: {problems:?}"),
                }
            }
            Err(e) => println!("error:    {e}"),
        }
        println!();
    }
}
