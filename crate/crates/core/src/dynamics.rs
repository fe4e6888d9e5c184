//! ε-best-response dynamics with a full trace of moves, payoffs and
//! potential values, and the convergence bound they are audited against.
//!
//! Movers always jump to a full best response over their candidate set.
//! A player with zero payoff counts as having a profitable deviation as soon
//! as some candidate gives her a strictly positive payoff.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{Game, Point, StrategyProfile};
use crate::values::{harmonic, Evaluator};

/// Payoffs closer than this are treated as equal when choosing a best
/// response; a move must beat the incumbent by more than this.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// Iteration cap when no convergence bound is available.
pub const FALLBACK_MAX_ITERS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BestResponse {
    pub location: usize,
    pub payoff: f64,
}

fn best_response_with(ev: &mut Evaluator<'_>, game: &Game, profile: &StrategyProfile, player: usize) -> BestResponse {
    let current = profile.get(player);
    let mut trial = profile.clone();
    let payoffs: Vec<f64> = (0..game.n_locations(player))
        .map(|loc| {
            trial.set(player, loc);
            ev.payoff(&trial, player)
        })
        .collect();
    let max = payoffs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if payoffs[current] >= max - TIE_TOLERANCE {
        return BestResponse {
            location: current,
            payoff: payoffs[current],
        };
    }
    let location = payoffs
        .iter()
        .position(|&p| p >= max - TIE_TOLERANCE)
        .expect("maximum is attained");
    BestResponse {
        location,
        payoff: payoffs[location],
    }
}

/// Payoff-maximizing candidate for `player` with the others fixed. Ties
/// keep the current location if it attains the maximum, otherwise the
/// lowest candidate index wins.
pub fn best_response(game: &Game, profile: &StrategyProfile, player: usize) -> Result<BestResponse> {
    game.check_profile(profile)?;
    game.check_player(player)?;
    Ok(best_response_with(&mut Evaluator::new(game), game, profile, player))
}

/// A unilateral move to a best response that is `(1 + ε)`-profitable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Deviation {
    pub player: usize,
    pub from: usize,
    pub to: usize,
    pub payoff_before: f64,
    pub payoff_after: f64,
}

pub(crate) fn deviation_with(
    ev: &mut Evaluator<'_>,
    game: &Game,
    profile: &StrategyProfile,
    player: usize,
    epsilon: f64,
) -> Option<Deviation> {
    let from = profile.get(player);
    let before = ev.payoff(profile, player);
    let best = best_response_with(ev, game, profile, player);
    let profitable = if before == 0.0 {
        best.payoff > 0.0
    } else {
        best.payoff > (1.0 + epsilon) * before
    };
    (best.location != from && profitable).then_some(Deviation {
        player,
        from,
        to: best.location,
        payoff_before: before,
        payoff_after: best.payoff,
    })
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon >= 0.0 && epsilon.is_finite() {
        Ok(())
    } else {
        Err(Error::Config(format!("epsilon {epsilon} must be a finite value >= 0")))
    }
}

/// The best-response deviation of `player` if it improves her payoff by
/// more than a factor `1 + ε`.
pub fn has_profitable_deviation(
    game: &Game,
    profile: &StrategyProfile,
    player: usize,
    epsilon: f64,
) -> Result<Option<Deviation>> {
    game.check_profile(profile)?;
    game.check_player(player)?;
    check_epsilon(epsilon)?;
    Ok(deviation_with(
        &mut Evaluator::new(game),
        game,
        profile,
        player,
        epsilon,
    ))
}

/// Per-step potential growth factor `1 + ε / (4 n (ln n + 1))`.
pub fn growth_factor(n: usize, epsilon: f64) -> f64 {
    1.0 + epsilon / (4.0 * n as f64 * ((n as f64).ln() + 1.0))
}

/// `ceil(4 n (ln n + 1) / ε * ln(H_n / Φ(x0)))`, or 0 when `Φ(x0) >= H_n`.
pub fn iteration_bound(n: usize, epsilon: f64, phi0: f64) -> Result<u64> {
    if !(phi0 > 0.0) {
        return Err(Error::UndefinedBound { phi0 });
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::Config(format!("epsilon {epsilon} must lie in (0, 1)")));
    }
    if n == 0 {
        return Err(Error::Config("iteration bound needs at least one player".into()));
    }
    let phi_max = harmonic(n);
    if phi0 >= phi_max {
        return Ok(0);
    }
    let nf = n as f64;
    let m = 4.0 * nf * (nf.ln() + 1.0) / epsilon * (phi_max / phi0).ln();
    Ok(m.ceil() as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoverRule {
    RoundRobin,
    #[default]
    LowestIndex,
    /// Uniform among players holding a profitable deviation.
    SeededRandom(u64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DynamicsConfig {
    pub epsilon: f64,
    /// `None` uses the convergence bound for symmetric games with positive
    /// start potential, and [`FALLBACK_MAX_ITERS`] otherwise.
    pub max_iters: Option<usize>,
    pub mover_rule: MoverRule,
}

impl DynamicsConfig {
    pub fn new(epsilon: f64) -> Self {
        Self {
            epsilon,
            max_iters: None,
            mover_rule: MoverRule::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Step {
    pub mover: usize,
    pub from: usize,
    pub to: usize,
    pub payoff_before: f64,
    pub payoff_after: f64,
    pub potential_before: f64,
    pub potential_after: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DynamicsTrace {
    pub epsilon: f64,
    pub initial_profile: StrategyProfile,
    pub final_profile: StrategyProfile,
    pub steps: Vec<Step>,
    pub converged: bool,
    pub iterations: usize,
    pub max_iters: usize,
    pub initial_potential: f64,
    pub final_potential: f64,
    /// `None` when the start potential is zero.
    pub iteration_bound: Option<u64>,
}

/// Runs best-response dynamics from `initial` until an ε-equilibrium over
/// the candidate sets is reached or `max_iters` moves were made.
pub fn run_dynamics(game: &Game, initial: &StrategyProfile, config: &DynamicsConfig) -> Result<DynamicsTrace> {
    game.check_profile(initial)?;
    let epsilon = config.epsilon;
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::Config(format!("epsilon {epsilon} must lie in (0, 1)")));
    }
    let n = game.n_players();
    let mut ev = Evaluator::new(game);
    let initial_potential = ev.potential(initial);
    let bound = iteration_bound(n, epsilon, initial_potential).ok();
    let max_iters = match (config.max_iters, bound) {
        (Some(m), _) => m,
        (None, Some(b)) if game.is_symmetric() => usize::try_from(b).unwrap_or(usize::MAX),
        (None, _) => FALLBACK_MAX_ITERS,
    };

    let mut rng = match config.mover_rule {
        MoverRule::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut cursor = 0usize;
    let mut profile = initial.clone();
    let mut potential = initial_potential;
    let mut steps = Vec::new();

    let converged = loop {
        let deviation = match config.mover_rule {
            MoverRule::LowestIndex => (0..n).find_map(|i| deviation_with(&mut ev, game, &profile, i, epsilon)),
            MoverRule::RoundRobin => (0..n)
                .map(|k| (cursor + k) % n)
                .find_map(|i| deviation_with(&mut ev, game, &profile, i, epsilon)),
            MoverRule::SeededRandom(_) => {
                let candidates: Vec<Deviation> = (0..n)
                    .filter_map(|i| deviation_with(&mut ev, game, &profile, i, epsilon))
                    .collect();
                candidates.choose(rng.as_mut().expect("seeded rng")).cloned()
            }
        };
        let Some(dev) = deviation else { break true };
        if steps.len() >= max_iters {
            break false;
        }
        profile.set(dev.player, dev.to);
        let after = ev.potential(&profile);
        steps.push(Step {
            mover: dev.player,
            from: dev.from,
            to: dev.to,
            payoff_before: dev.payoff_before,
            payoff_after: dev.payoff_after,
            potential_before: potential,
            potential_after: after,
        });
        potential = after;
        cursor = (dev.player + 1) % n;
    };

    Ok(DynamicsTrace {
        epsilon,
        initial_profile: initial.clone(),
        final_profile: profile,
        iterations: steps.len(),
        steps,
        converged,
        max_iters,
        initial_potential,
        final_potential: potential,
        iteration_bound: bound,
    })
}

#[derive(Serialize)]
struct StepLine<'a> {
    #[serde(rename = "type")]
    kind: &'static str,
    index: usize,
    #[serde(flatten)]
    step: &'a Step,
    from_point: &'a Point,
    to_point: &'a Point,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    #[serde(rename = "type")]
    kind: &'static str,
    epsilon: f64,
    initial_profile: &'a StrategyProfile,
    final_profile: &'a StrategyProfile,
    final_points: Vec<&'a Point>,
    converged: bool,
    iterations: usize,
    max_iters: usize,
    initial_potential: f64,
    final_potential: f64,
    iteration_bound: Option<u64>,
}

impl DynamicsTrace {
    /// One JSON object per step, followed by a summary object.
    pub fn to_jsonl(&self, game: &Game) -> String {
        let mut out = String::new();
        for (index, step) in self.steps.iter().enumerate() {
            let line = StepLine {
                kind: "step",
                index,
                step,
                from_point: &game.locations(step.mover)[step.from],
                to_point: &game.locations(step.mover)[step.to],
            };
            out.push_str(&serde_json::to_string(&line).expect("step serializes"));
            out.push('\n');
        }
        let summary = SummaryLine {
            kind: "summary",
            epsilon: self.epsilon,
            initial_profile: &self.initial_profile,
            final_profile: &self.final_profile,
            final_points: self
                .final_profile
                .choices()
                .iter()
                .enumerate()
                .map(|(p, &l)| &game.locations(p)[l])
                .collect(),
            converged: self.converged,
            iterations: self.iterations,
            max_iters: self.max_iters,
            initial_potential: self.initial_potential,
            final_potential: self.final_potential,
            iteration_bound: self.iteration_bound,
        };
        out.push_str(&serde_json::to_string(&summary).expect("summary serializes"));
        out.push('\n');
        out
    }

    /// Step table with a header row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,mover,from,to,payoff_before,payoff_after,potential_before,potential_after\n");
        for (i, s) in self.steps.iter().enumerate() {
            out.push_str(&format!(
                "{i},{},{},{},{:?},{:?},{:?},{:?}\n",
                s.mover, s.from, s.to, s.payoff_before, s.payoff_after, s.potential_before, s.potential_after
            ));
        }
        out
    }
}
