use proptest::prelude::*;

use seplogic::formulas::{self, LIBRARY};
use seplogic::random::{random_formula, rng};
use seplogic::syntax::{parse_with_signature, validate_sentence, Violation};
use seplogic::{parse, print, Formula, Graph, ParseError, Signature};

#[test]
fn parses_the_connectivity_sentence() {
    let f = parse("forall x. forall y. conn(x, y |)").unwrap();
    let expected = Formula::forall("x", Formula::forall("y", Formula::conn("x", "y", Vec::<String>::new())));
    assert_eq!(f, expected);
    assert_eq!(parse("forall x.forall y.conn(x,y|)").unwrap(), expected);
    assert_eq!(parse("forall x. forall y. conn(x, y)").unwrap(), expected);
}

#[test]
fn parses_dp_atoms() {
    assert_eq!(parse("dp[(x,y),(z,z)]").unwrap(), Formula::dp([("x", "y"), ("z", "z")]));
    assert!(parse("dp[]").is_err());
}

#[test]
fn reports_the_position_of_a_dangling_connective() {
    let err = parse("exists x. E(x, x) &").unwrap_err();
    assert!(matches!(err, ParseError::Syntax { .. }));
    assert_eq!(err.position(), (1, 20));
    let err = parse("forall x.\n  E(x, ").unwrap_err();
    assert_eq!(err.position().0, 2);
}

#[test]
fn precedence_and_associativity() {
    let f = parse("a = b | c = d & !E(a, c) -> a = c -> b = d").unwrap();
    let expected = Formula::eq("a", "b")
        .or(Formula::eq("c", "d").and(Formula::edge("a", "c").negate()))
        .implies(Formula::eq("a", "c").implies(Formula::eq("b", "d")));
    assert_eq!(f, expected);
    let f = parse("exists x. E(x, y) & x = y").unwrap();
    assert_eq!(f, Formula::exists("x", Formula::edge("x", "y").and(Formula::eq("x", "y"))));
}

#[test]
fn unicode_aliases_and_comments() {
    let ascii = parse("forall x. exists y. !(x = y) & (E(x, y) | x != y) -> x < y").unwrap();
    let unicode = parse("# comment\n∀x. ∃y. ¬(x = y) ∧ (E(x, y) ∨ x ≠ y) → x < y").unwrap();
    assert_eq!(ascii, unicode);
    assert!(print(&unicode).is_ascii());
}

#[test]
fn printer_examples() {
    assert_eq!(print(&Formula::conn("x", "y", ["z"])), "conn(x, y | z)");
    assert_eq!(print(&Formula::eq("x", "y").and(Formula::edge("x", "y"))), "x = y & E(x, y)");
    assert_eq!(print(&Formula::exists("x", Formula::eq("x", "x").negate())), "exists x. !(x = x)");
    assert_eq!(print(&formulas::connectivity()), "forall x. forall y. conn(x, y |)");
    assert_eq!(print(&Formula::rel("<", ["x", "y"])), "x < y");
}

#[test]
fn signature_arity_is_checked_while_parsing() {
    let sig = Signature::from([("E".to_string(), 2)]);
    let err = parse_with_signature("exists x. E(x)", &sig).unwrap_err();
    assert!(matches!(err, ParseError::Arity { expected: 2, found: 1, .. }));
    assert_eq!(err.position(), (1, 11));
    assert!(parse_with_signature("exists x. P(x, x, x)", &sig).is_ok());
}

#[test]
fn validation() {
    assert_eq!(validate_sentence(&parse("forall x. forall y. conn(x,y|)").unwrap(), None), Ok(()));
    let errors = validate_sentence(&parse("E(x,y)").unwrap(), None).unwrap_err();
    assert_eq!(errors, vec![Violation::FreeVariables(["x".into(), "y".into()].into())]);
    let errors = validate_sentence(&parse("exists x. E(x)").unwrap(), None).unwrap_err();
    assert!(matches!(&errors[..], [Violation::ArityMismatch { expected: 2, found: 1, .. }]));
    let errors = validate_sentence(&parse("exists x. exists x. x = x").unwrap(), None).unwrap_err();
    assert_eq!(errors, vec![Violation::Shadowed("x".into())]);
    let errors = validate_sentence(&parse("exists x. P(x) & P(x, x)").unwrap(), None).unwrap_err();
    assert!(matches!(&errors[..], [Violation::InconsistentArity { .. }]));
    let sig = Signature::from([("P".to_string(), 1)]);
    let errors = validate_sentence(&parse("exists x. P(x, x)").unwrap(), Some(&sig)).unwrap_err();
    assert!(matches!(&errors[..], [Violation::ArityMismatch { found: 2, .. }]));
}

#[test]
fn library_output_round_trips_and_validates() {
    let params: [&[&str]; 8] = [&[], &["0"], &["1"], &["2"], &["K3"], &["K4"], &["C4"], &["K3,3"]];
    let mut built = 0;
    for (name, _) in LIBRARY {
        for p in params {
            let Ok(f) = formulas::build(name, p) else { continue };
            built += 1;
            assert_eq!(parse(&print(&f)).as_ref(), Ok(&f), "{name} {p:?}");
            if f.is_sentence() {
                assert_eq!(validate_sentence(&f, None), Ok(()), "{name} {p:?}");
            }
        }
    }
    assert!(built >= LIBRARY.len());
    let planar = formulas::planarity_formula();
    assert_eq!(parse(&print(&planar)).unwrap(), planar);
    assert_eq!(validate_sentence(&formulas::minor_formula(&Graph::complete(5)), None), Ok(()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn printing_then_parsing_is_the_identity(seed in any::<u64>(), depth in 0usize..=6) {
        let f = random_formula(&mut rng(seed), depth);
        let text = print(&f);
        prop_assert_eq!(parse(&text), Ok(f), "{}", text);
    }

    #[test]
    fn printing_is_a_fixed_point(seed in any::<u64>()) {
        let text = print(&random_formula(&mut rng(seed), 5));
        prop_assert_eq!(print(&parse(&text).unwrap()), text);
    }

    #[test]
    fn garbage_never_panics(text in "[a-zE(),.|&!<=\\[\\] -]{0,40}") {
        let _ = parse(&text);
    }
}
