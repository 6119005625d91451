use std::fmt::Write;

use crate::logic::Formula;

// Binding strength; an operand weaker than its slot requires gets parentheses.
const QUANT: u8 = 0;
const IMPL: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;
const ATOM: u8 = 5;

fn strength(f: &Formula) -> u8 {
    match f {
        Formula::Exists(..) | Formula::Forall(..) => QUANT,
        Formula::Implies(..) => IMPL,
        Formula::Or(..) => OR,
        Formula::And(..) => AND,
        Formula::Not(_) | Formula::Equals(..) => UNARY,
        Formula::Rel(name, _) if name == "<" => UNARY,
        _ => ATOM,
    }
}

pub(super) fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, QUANT);
    out
}

fn write_formula(out: &mut String, f: &Formula, slot: u8) {
    // a quantifier extends as far right as possible, so it is always
    // wrapped when it is not the whole slot
    let wrap = strength(f) < slot || (strength(f) == QUANT && slot > QUANT);
    if wrap {
        out.push('(');
    }
    match f {
        Formula::Equals(x, y) => write!(out, "{x} = {y}").unwrap(),
        Formula::Rel(name, args) if name == "<" && args.len() == 2 => {
            write!(out, "{} < {}", args[0], args[1]).unwrap()
        }
        Formula::Rel(name, args) => write!(out, "{name}({})", args.join(", ")).unwrap(),
        Formula::Conn { x, y, deleted } if deleted.is_empty() => write!(out, "conn({x}, {y} |)").unwrap(),
        Formula::Conn { x, y, deleted } => write!(out, "conn({x}, {y} | {})", deleted.join(", ")).unwrap(),
        Formula::Dp(pairs) => {
            let pairs: Vec<String> = pairs.iter().map(|(a, b)| format!("({a}, {b})")).collect();
            write!(out, "dp[{}]", pairs.join(", ")).unwrap()
        }
        Formula::Not(a) => {
            out.push('!');
            let inner = if matches!(**a, Formula::Not(_)) { UNARY } else { ATOM };
            write_formula(out, a, inner);
        }
        Formula::And(a, b) => binary(out, a, " & ", b, AND, UNARY),
        Formula::Or(a, b) => binary(out, a, " | ", b, OR, AND),
        Formula::Implies(a, b) => binary(out, a, " -> ", b, OR, IMPL),
        Formula::Exists(x, body) => {
            write!(out, "exists {x}. ").unwrap();
            write_formula(out, body, QUANT);
        }
        Formula::Forall(x, body) => {
            write!(out, "forall {x}. ").unwrap();
            write_formula(out, body, QUANT);
        }
    }
    if wrap {
        out.push(')');
    }
}

fn binary(out: &mut String, a: &Formula, op: &str, b: &Formula, left: u8, right: u8) {
    write_formula(out, a, left);
    out.push_str(op);
    write_formula(out, b, right);
}
