//! Model checking and Ehrenfeucht–Fraïssé games for separator logic and
//! disjoint-paths logic on finite graphs.
//!
//! Separator logic (`FO+conn`) extends first-order logic over a graph with
//! atoms `conn(x, y | z1, ..., zk)`, true when `x` and `y` are connected
//! once `z1, ..., zk` are deleted. Disjoint-paths logic (`FO+DP`) adds
//! atoms `dp[(x1, y1), ..., (xk, yk)]`, true when internally vertex-disjoint
//! paths link every pair.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] and [`structure`] hold the carriers and brute-force oracles,
//! * [`logic`] is the formula AST with its analyses and relativisations,
//! * [`syntax`] parses and prints the concrete formula syntax,
//! * [`eval`] is the model checker,
//! * [`formulas`] builds the standard constructions (connectivity, feedback
//!   vertex sets, elimination distance, minors, planarity, tree orders),
//! * [`games`] solves the plain, `conn` and `dp` Ehrenfeucht–Fraïssé games,
//! * [`families`] generates the graph pairs those games separate,
//! * [`random`] supplies seeded random graphs, trees and sentences.

pub mod eval;
pub mod families;
pub mod formulas;
pub mod games;
pub mod graph;
pub mod logic;
pub mod random;
pub mod structure;
pub mod syntax;

pub use eval::{evaluate, evaluate_sentence, Assignment, EvalError, Evaluator};
pub use graph::{Graph, GraphError, Path, Vertex};
pub use logic::{Formula, Fragment};
pub use structure::{RelationalStructure, Signature, StructureError};
pub use syntax::{parse, print, ParseError};
