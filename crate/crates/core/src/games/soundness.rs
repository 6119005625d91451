use crate::eval::{Assignment, Evaluator};
use crate::logic::{Formula, Var};
use crate::random::{random_sentence, rng, SentenceSpec};
use crate::structure::RelationalStructure;

use super::{solve, GameConfig, GameError, Player};

/// Outcome of [`sample_soundness`].
#[derive(Debug, Clone, PartialEq)]
pub struct SoundnessReport {
    pub winner: Player,
    pub samples: usize,
    /// Sampled formulas on which the structures disagree although
    /// Duplicator wins. Always empty unless the solver is wrong.
    pub disagreements: Vec<Formula>,
    /// For a Spoiler win, the first sampled formula telling the structures
    /// apart, if the sample contained one.
    pub distinguishing: Option<Formula>,
}

impl SoundnessReport {
    pub fn is_sound(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Samples formulas of the game's fragment with quantifier rank at most
/// `max_qr` and compares their truth values on `a` and `b`. Pinned pairs
/// become free variables `p0, p1, ...` interpreted by the pinned elements.
pub fn sample_soundness(
    a: &RelationalStructure,
    b: &RelationalStructure,
    cfg: &GameConfig,
    samples: usize,
    max_qr: usize,
    seed: u64,
) -> Result<SoundnessReport, GameError> {
    assert!(max_qr <= cfg.rounds, "sampled rank exceeds the number of rounds");
    let winner = solve(a, b, cfg)?.winner;
    let free: Vec<Var> = (0..cfg.pinned.len()).map(|i| format!("p{i}")).collect();
    let assign_a: Assignment = free.iter().cloned().zip(cfg.pinned.iter().map(|p| p.0)).collect();
    let assign_b: Assignment = free.iter().cloned().zip(cfg.pinned.iter().map(|p| p.1)).collect();
    let mut spec = SentenceSpec::new(max_qr, cfg.variant.fragment(), a.signature());
    spec.free = free;
    let mut report = SoundnessReport {
        winner,
        samples: 0,
        disagreements: Vec::new(),
        distinguishing: None,
    };
    if max_qr == 0 && spec.free.is_empty() {
        return Ok(report);
    }
    let (mut eval_a, mut eval_b) = (Evaluator::new(a), Evaluator::new(b));
    let mut r = rng(seed);
    for _ in 0..samples {
        let f = random_sentence(&mut r, &spec);
        report.samples += 1;
        let in_a = eval_a.evaluate(&f, &assign_a).expect("sampled over the shared signature");
        let in_b = eval_b.evaluate(&f, &assign_b).expect("sampled over the shared signature");
        if in_a != in_b {
            match winner {
                Player::Duplicator => report.disagreements.push(f),
                Player::Spoiler => {
                    report.distinguishing = Some(f);
                    break;
                }
            }
        }
    }
    Ok(report)
}
