//! Exact solvers for Ehrenfeucht–Fraïssé games.
//!
//! In the `q`-round game on structures `A` and `B`, Spoiler picks an
//! element of either structure each round and Duplicator answers with an
//! element of the other. Duplicator wins when the final pebble map
//! `a_i ↦ b_i` (pinned pairs first) satisfies the winning condition:
//!
//! * [`Variant::Plain`]: the map is a partial isomorphism;
//! * [`Variant::Conn`]`(k)`: additionally every atom `conn_l` with
//!   `l <= k` over pebble indices has the same value on both sides;
//! * [`Variant::Dp`]`(k)`: additionally every `dp_l` atom with
//!   `1 <= l <= k` pairs agrees.
//!
//! Duplicator wins the game iff `A` and `B` (with the pinned elements as
//! constants) agree on all formulas of the matching fragment with
//! quantifier rank at most `q`.
//!
//! The solver is a plain minimax search. It relies on one observation: every
//! clause of a winning condition mentions a bounded set of pebbles, so a
//! position violating the condition cannot be repaired by later moves, and
//! Duplicator loses as soon as she makes one. Positions are memoised on
//! the set of pebble pairs, since order and repetitions do not affect any
//! clause. Spoiler never needs to play an already pebbled element: the
//! only safe answer is the matching pebble, which wastes his round.

mod condition;
mod soundness;
mod strategy;

pub use soundness::{sample_soundness, SoundnessReport};
pub use strategy::{verify_strategy, Move, Side, Strategy};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Vertex;
use crate::logic::Fragment;
use crate::structure::RelationalStructure;

use condition::Checker;

/// Default cap on the estimated number of leaves `(|A| + |B|)^q`.
pub const DEFAULT_BUDGET: f64 = 1e8;

/// Strategy trees larger than this are not extracted.
pub const DEFAULT_STRATEGY_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Plain,
    Conn(usize),
    Dp(usize),
}

impl Variant {
    /// The fragment whose rank-`q` theory the game characterises.
    pub fn fragment(self) -> Fragment {
        match self {
            Variant::Plain => Fragment::Fo,
            Variant::Conn(k) => Fragment::Conn(k),
            Variant::Dp(k) => Fragment::Dp(k),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Plain => write!(f, "plain"),
            Variant::Conn(k) => write!(f, "conn:{k}"),
            Variant::Dp(k) => write!(f, "dp:{k}"),
        }
    }
}

impl FromStr for Variant {
    type Err = GameError;

    /// `plain`, `conn:K` or `dp:K` with `K >= 1` for `dp`.
    fn from_str(s: &str) -> Result<Self, GameError> {
        let bad = || GameError::BadVariant(s.to_string());
        if s == "plain" {
            return Ok(Variant::Plain);
        }
        let (kind, k) = s.split_once(':').ok_or_else(bad)?;
        let k: usize = k.parse().map_err(|_| bad())?;
        match kind {
            "conn" => Ok(Variant::Conn(k)),
            "dp" if k >= 1 => Ok(Variant::Dp(k)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    Spoiler,
    Duplicator,
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Spoiler => write!(f, "Spoiler"),
            Player::Duplicator => write!(f, "Duplicator"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GameConfig {
    pub rounds: usize,
    pub variant: Variant,
    /// Opening pairs `(a, b)` placed before the first round.
    pub pinned: Vec<(Vertex, Vertex)>,
    pub extract_strategy: bool,
    pub strategy_cap: usize,
    pub budget: f64,
}

impl GameConfig {
    pub fn new(rounds: usize, variant: Variant) -> Self {
        GameConfig {
            rounds,
            variant,
            pinned: Vec::new(),
            extract_strategy: false,
            strategy_cap: DEFAULT_STRATEGY_CAP,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn pinned(mut self, pinned: Vec<(Vertex, Vertex)>) -> Self {
        self.pinned = pinned;
        self
    }

    pub fn with_strategy(mut self) -> Self {
        self.extract_strategy = true;
        self
    }

    pub fn budget(mut self, budget: f64) -> Self {
        self.budget = budget;
        self
    }

    /// Estimated number of leaves, `(|A| + |B|)^q`.
    pub fn estimate(&self, a: &RelationalStructure, b: &RelationalStructure) -> f64 {
        ((a.size() + b.size()) as f64).powi(self.rounds as i32)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GameResult {
    pub winner: Player,
    /// A winning strategy for `winner`, when requested and not too large.
    pub strategy: Option<Strategy>,
    /// Distinct positions searched.
    pub positions: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GameError {
    #[error("estimated {estimate:.3e} leaves exceeds the budget of {budget:.3e}")]
    Budget { estimate: f64, budget: f64 },
    #[error("pinned pair ({a}, {b}) is outside the universes of sizes {size_a} and {size_b}")]
    PinnedOutOfRange {
        a: Vertex,
        b: Vertex,
        size_a: usize,
        size_b: usize,
    },
    #[error("the structures have different signatures")]
    SignatureMismatch,
    #[error("unknown game variant `{0}`, expected plain, conn:K or dp:K")]
    BadVariant(String),
}

/// Decides the game exactly.
pub fn solve(a: &RelationalStructure, b: &RelationalStructure, cfg: &GameConfig) -> Result<GameResult, GameError> {
    if a.signature() != b.signature() {
        return Err(GameError::SignatureMismatch);
    }
    for &(x, y) in &cfg.pinned {
        if x >= a.size() || y >= b.size() {
            return Err(GameError::PinnedOutOfRange {
                a: x,
                b: y,
                size_a: a.size(),
                size_b: b.size(),
            });
        }
    }
    let estimate = cfg.estimate(a, b);
    if estimate > cfg.budget {
        return Err(GameError::Budget {
            estimate,
            budget: cfg.budget,
        });
    }
    let mut solver = Solver {
        a,
        b,
        checker: Checker::new(a, b, cfg.variant),
        memo: HashMap::new(),
    };
    let mut pos = cfg.pinned.clone();
    let wins = solver.checker.holds(&pos) && solver.duplicator_wins(&mut pos, cfg.rounds);
    let winner = if wins { Player::Duplicator } else { Player::Spoiler };
    let strategy = if cfg.extract_strategy {
        let mut budget = cfg.strategy_cap;
        let mut pos = cfg.pinned.clone();
        if wins {
            solver.duplicator_strategy(&mut pos, cfg.rounds, &mut budget)
        } else {
            solver.spoiler_strategy(&mut pos, cfg.rounds, &mut budget)
        }
    } else {
        None
    };
    Ok(GameResult {
        winner,
        strategy,
        positions: solver.memo.len(),
    })
}

/// Whether the pebble map `a_i ↦ b_i` satisfies the winning condition of
/// `variant`.
pub fn check_winning_condition(
    a: &RelationalStructure,
    b: &RelationalStructure,
    pebbles: &[(Vertex, Vertex)],
    variant: Variant,
) -> bool {
    a.signature() == b.signature() && Checker::new(a, b, variant).holds(pebbles)
}

pub(crate) struct Solver<'s> {
    a: &'s RelationalStructure,
    b: &'s RelationalStructure,
    checker: Checker<'s>,
    memo: HashMap<(usize, Vec<(Vertex, Vertex)>), bool>,
}

impl Solver<'_> {
    fn side_size(&self, side: Side) -> usize {
        match side {
            Side::A => self.a.size(),
            Side::B => self.b.size(),
        }
    }

    /// Appends the pair for `m` answered by `reply` and checks the new
    /// clauses; the pair stays pushed either way.
    fn play(&mut self, pos: &mut Vec<(Vertex, Vertex)>, m: Move, reply: Vertex) -> bool {
        pos.push(match m.side {
            Side::A => (m.element, reply),
            Side::B => (reply, m.element),
        });
        self.checker.extends(pos)
    }

    /// Position already satisfies the condition; can Duplicator survive
    /// `rounds` more rounds?
    fn duplicator_wins(&mut self, pos: &mut Vec<(Vertex, Vertex)>, rounds: usize) -> bool {
        if rounds == 0 {
            return true;
        }
        let mut key = pos.clone();
        key.sort_unstable();
        key.dedup();
        let key = (rounds, key);
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let mut result = true;
        'moves: for side in [Side::A, Side::B] {
            for element in 0..self.side_size(side) {
                let pebbled = pos.iter().any(|&(x, y)| match side {
                    Side::A => x == element,
                    Side::B => y == element,
                });
                if pebbled {
                    continue;
                }
                if self.reply(pos, Move { side, element }, rounds).is_none() {
                    result = false;
                    break 'moves;
                }
            }
        }
        self.memo.insert(key, result);
        result
    }

    /// A winning answer to `m`, if any.
    fn reply(&mut self, pos: &mut Vec<(Vertex, Vertex)>, m: Move, rounds: usize) -> Option<Vertex> {
        for reply in 0..self.side_size(m.side.other()) {
            let ok = self.play(pos, m, reply) && self.duplicator_wins(pos, rounds - 1);
            pos.pop();
            if ok {
                return Some(reply);
            }
        }
        None
    }
}
