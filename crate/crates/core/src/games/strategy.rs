use std::fmt::{self, Write as _};

use crate::graph::Vertex;
use crate::structure::RelationalStructure;

use super::condition::Checker;
use super::{GameConfig, Player, Solver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Spoiler's choice of an element in one of the structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub side: Side,
    pub element: Vertex,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:{}", self.side, self.element)
    }
}

/// A winning strategy as an explicit move tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// No more moves: the rounds are used up, or Duplicator's last answer
    /// already broke the winning condition.
    Done,
    /// Duplicator's answer to every possible Spoiler move.
    Duplicator(Vec<(Move, Vertex, Strategy)>),
    /// Spoiler's move and how to continue after every possible answer.
    Spoiler { play: Move, replies: Vec<(Vertex, Strategy)> },
}

impl Strategy {
    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + match self {
            Strategy::Done => 0,
            Strategy::Duplicator(moves) => moves.iter().map(|(_, _, s)| s.size()).sum(),
            Strategy::Spoiler { replies, .. } => replies.iter().map(|(_, s)| s.size()).sum(),
        }
    }

    /// Indented move tree, one line per move and answer.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        match self {
            Strategy::Done => {}
            Strategy::Duplicator(moves) => {
                for (m, reply, next) in moves {
                    let answer = Move {
                        side: m.side.other(),
                        element: *reply,
                    };
                    writeln!(out, "{pad}Spoiler {m} -> Duplicator {answer}").unwrap();
                    next.render_into(out, depth + 1);
                }
            }
            Strategy::Spoiler { play, replies } => {
                writeln!(out, "{pad}Spoiler {play}").unwrap();
                for (reply, next) in replies {
                    let answer = Move {
                        side: play.side.other(),
                        element: *reply,
                    };
                    match next {
                        Strategy::Done => writeln!(out, "{pad}  Duplicator {answer}: condition broken").unwrap(),
                        _ => {
                            writeln!(out, "{pad}  Duplicator {answer}").unwrap();
                            next.render_into(out, depth + 2);
                        }
                    }
                }
            }
        }
    }
}

fn moves(a: &RelationalStructure, b: &RelationalStructure) -> impl Iterator<Item = Move> {
    let (na, nb) = (a.size(), b.size());
    (0..na)
        .map(|element| Move { side: Side::A, element })
        .chain((0..nb).map(|element| Move { side: Side::B, element }))
}

fn pair(m: Move, reply: Vertex) -> (Vertex, Vertex) {
    match m.side {
        Side::A => (m.element, reply),
        Side::B => (reply, m.element),
    }
}

impl Solver<'_> {
    /// Duplicator wins from `pos` (which satisfies the condition) with
    /// `rounds` left.
    pub(super) fn duplicator_strategy(
        &mut self,
        pos: &mut Vec<(Vertex, Vertex)>,
        rounds: usize,
        budget: &mut usize,
    ) -> Option<Strategy> {
        *budget = budget.checked_sub(1)?;
        if rounds == 0 {
            return Some(Strategy::Done);
        }
        let mut out = Vec::new();
        for m in moves(self.a, self.b) {
            let reply = self.reply(pos, m, rounds)?;
            pos.push(pair(m, reply));
            let next = self.duplicator_strategy(pos, rounds - 1, budget);
            pos.pop();
            out.push((m, reply, next?));
        }
        Some(Strategy::Duplicator(out))
    }

    /// Spoiler wins from `pos` with `rounds` left.
    pub(super) fn spoiler_strategy(
        &mut self,
        pos: &mut Vec<(Vertex, Vertex)>,
        rounds: usize,
        budget: &mut usize,
    ) -> Option<Strategy> {
        *budget = budget.checked_sub(1)?;
        if !self.checker.holds(pos) {
            return Some(Strategy::Done);
        }
        let play = moves(self.a, self.b).find(|&m| rounds > 0 && self.reply(pos, m, rounds).is_none())?;
        let mut replies = Vec::new();
        for reply in 0..self.side_size(play.side.other()) {
            let next = if self.play(pos, play, reply) {
                self.spoiler_strategy(pos, rounds - 1, budget)
            } else {
                *budget = budget.checked_sub(1)?;
                Some(Strategy::Done)
            };
            pos.pop();
            replies.push((reply, next?));
        }
        Some(Strategy::Spoiler { play, replies })
    }
}

/// Replays `strategy` against every line of the opponent and checks that
/// `winner` wins all of them.
pub fn verify_strategy(
    a: &RelationalStructure,
    b: &RelationalStructure,
    cfg: &GameConfig,
    winner: Player,
    strategy: &Strategy,
) -> bool {
    if a.signature() != b.signature() {
        return false;
    }
    let mut checker = Checker::new(a, b, cfg.variant);
    let mut pos = cfg.pinned.clone();
    match winner {
        Player::Duplicator => checker.holds(&pos) && duplicator_line(a, b, &mut checker, &mut pos, cfg.rounds, strategy),
        Player::Spoiler => spoiler_line(a, b, &mut checker, &mut pos, cfg.rounds, strategy),
    }
}

fn duplicator_line(
    a: &RelationalStructure,
    b: &RelationalStructure,
    checker: &mut Checker,
    pos: &mut Vec<(Vertex, Vertex)>,
    rounds: usize,
    strategy: &Strategy,
) -> bool {
    match strategy {
        Strategy::Done => rounds == 0,
        Strategy::Duplicator(answers) if rounds > 0 => {
            let all: Vec<Move> = moves(a, b).collect();
            if answers.len() != all.len() || answers.iter().zip(&all).any(|((m, _, _), n)| m != n) {
                return false;
            }
            answers.iter().all(|&(m, reply, ref next)| {
                let size = match m.side {
                    Side::A => b.size(),
                    Side::B => a.size(),
                };
                if reply >= size {
                    return false;
                }
                pos.push(pair(m, reply));
                let ok = checker.extends(pos) && duplicator_line(a, b, checker, pos, rounds - 1, next);
                pos.pop();
                ok
            })
        }
        _ => false,
    }
}

fn spoiler_line(
    a: &RelationalStructure,
    b: &RelationalStructure,
    checker: &mut Checker,
    pos: &mut Vec<(Vertex, Vertex)>,
    rounds: usize,
    strategy: &Strategy,
) -> bool {
    match strategy {
        Strategy::Done => !checker.holds(pos),
        Strategy::Spoiler { play, replies } if rounds > 0 => {
            let (own, other) = match play.side {
                Side::A => (a.size(), b.size()),
                Side::B => (b.size(), a.size()),
            };
            if play.element >= own || replies.len() != other || replies.iter().enumerate().any(|(i, (r, _))| i != *r) {
                return false;
            }
            replies.iter().all(|(reply, next)| {
                pos.push(pair(*play, *reply));
                let ok = spoiler_line(a, b, checker, pos, rounds - 1, next);
                pos.pop();
                ok
            })
        }
        _ => false,
    }
}
