//! Player payoffs, the exact potential and social welfare.
//!
//! All three are weighted sums of closed-form per-user terms, accumulated
//! in user index order.

use serde::Serialize;

use crate::attraction::{attraction_into, sort_ascending, Scratch};
use crate::error::Result;
use crate::game::{Game, StrategyProfile};

/// `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: usize) -> f64 {
    (1..=n).map(|k| 1.0 / k as f64).sum()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValueVector {
    pub payoffs: Vec<f64>,
    pub potential: f64,
    pub welfare: f64,
}

/// Evaluates payoffs, potential and welfare of a profile in one pass.
pub(crate) struct Evaluator<'g> {
    game: &'g Game,
    sims: Vec<f64>,
    scratch: Scratch,
    harmonics: Vec<f64>,
}

impl<'g> Evaluator<'g> {
    pub fn new(game: &'g Game) -> Self {
        let n = game.n_players();
        Self {
            game,
            sims: Vec::with_capacity(n),
            scratch: Scratch::default(),
            harmonics: (0..=n).map(harmonic).collect(),
        }
    }

    pub fn payoffs(&mut self, profile: &StrategyProfile) -> Vec<f64> {
        let mut out = vec![0.0; self.game.n_players()];
        for u in 0..self.game.n_users() {
            let w = self.game.users().weight(u);
            self.game.profile_similarities(profile, u, &mut self.sims);
            attraction_into(&self.sims, &mut self.scratch);
            for (acc, mu) in out.iter_mut().zip(&self.scratch.mu) {
                *acc += w * mu;
            }
        }
        out
    }

    pub fn payoff(&mut self, profile: &StrategyProfile, player: usize) -> f64 {
        let mut total = 0.0;
        for u in 0..self.game.n_users() {
            self.game.profile_similarities(profile, u, &mut self.sims);
            attraction_into(&self.sims, &mut self.scratch);
            total += self.game.users().weight(u) * self.scratch.mu[player];
        }
        total
    }

    pub fn potential(&mut self, profile: &StrategyProfile) -> f64 {
        let n = self.game.n_players();
        let mut total = 0.0;
        for u in 0..self.game.n_users() {
            self.game.profile_similarities(profile, u, &mut self.sims);
            sort_ascending(&self.sims, &mut self.scratch.order);
            let mut prev = 0.0;
            let mut per_user = 0.0;
            for (j, &p) in self.scratch.order.iter().enumerate() {
                let s = self.sims[p];
                // 1-based rank j+1 carries weight H_{n-j}
                per_user += (s - prev) * self.harmonics[n - j];
                prev = s;
            }
            total += self.game.users().weight(u) * per_user;
        }
        total
    }

    pub fn welfare(&mut self, profile: &StrategyProfile) -> f64 {
        let mut total = 0.0;
        for u in 0..self.game.n_users() {
            self.game.profile_similarities(profile, u, &mut self.sims);
            let max = self.sims.iter().copied().fold(0.0, f64::max);
            total += self.game.users().weight(u) * max;
        }
        total
    }
}

/// `pi_i(x)`: expected share of users attracted to player `i`.
pub fn payoff(game: &Game, profile: &StrategyProfile, player: usize) -> Result<f64> {
    game.check_profile(profile)?;
    game.check_player(player)?;
    Ok(Evaluator::new(game).payoff(profile, player))
}

/// Payoffs of all players.
pub fn payoffs(game: &Game, profile: &StrategyProfile) -> Result<Vec<f64>> {
    game.check_profile(profile)?;
    Ok(Evaluator::new(game).payoffs(profile))
}

/// Exact potential: per user, `sum_j (s_j - s_{j-1}) H_{n-j+1}` over the
/// ascending similarities, weighted by the user's mass.
pub fn potential(game: &Game, profile: &StrategyProfile) -> Result<f64> {
    game.check_profile(profile)?;
    Ok(Evaluator::new(game).potential(profile))
}

/// Weighted maximum similarity users attain under the profile.
pub fn social_welfare(game: &Game, profile: &StrategyProfile) -> Result<f64> {
    game.check_profile(profile)?;
    Ok(Evaluator::new(game).welfare(profile))
}

pub fn evaluate(game: &Game, profile: &StrategyProfile) -> Result<ValueVector> {
    game.check_profile(profile)?;
    let mut ev = Evaluator::new(game);
    Ok(ValueVector {
        payoffs: ev.payoffs(profile),
        potential: ev.potential(profile),
        welfare: ev.welfare(profile),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{SimilarityModel, UserSpace};

    fn single_user(sims: &[f64]) -> Game {
        let users = UserSpace::uniform(vec![vec![0.0]]).unwrap();
        let tables = sims.iter().map(|&s| SimilarityModel::Table(vec![vec![s]])).collect();
        Game::asymmetric(users, vec![vec![vec![0.0]]; sims.len()], tables).unwrap()
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(0), 0.0);
        assert_eq!(harmonic(1), 1.0);
        assert!((harmonic(3) - 11.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn single_user_values() {
        let game = single_user(&[0.3, 0.5, 0.7]);
        let x = StrategyProfile::new(vec![0, 0, 0]);
        let v = evaluate(&game, &x).unwrap();
        for (got, want) in v.payoffs.iter().zip([0.1, 0.2, 0.4]) {
            assert!((got - want).abs() < 1e-12);
        }
        // 0.3 * 11/6 + 0.2 * 3/2 + 0.2 * 1
        assert!((v.potential - 1.05).abs() < 1e-12);
        assert!((v.welfare - 0.7).abs() < 1e-12);
    }

    #[test]
    fn single_player_potential_equals_payoff() {
        let game = single_user(&[0.7]);
        let x = StrategyProfile::new(vec![0]);
        assert!((potential(&game, &x).unwrap() - 0.7).abs() < 1e-15);
        assert!((payoff(&game, &x, 0).unwrap() - 0.7).abs() < 1e-15);
    }

    #[test]
    fn lone_facility_on_segment_approaches_three_quarters() {
        // analytic value 1 - (x^2 + (1-x)^2)/2 at x = 1/2
        for m in [10usize, 100, 1000] {
            let users = UserSpace::unit_interval(m).unwrap();
            let game = Game::symmetric(users, 1, vec![vec![0.5]], SimilarityModel::SegmentKernel).unwrap();
            let p = payoff(&game, &StrategyProfile::new(vec![0]), 0).unwrap();
            assert!((p - 0.75).abs() <= 1.0 / (m * m) as f64 + 1e-12, "m={m}: {p}");
        }
    }

    #[test]
    fn rejects_bad_profile() {
        let game = single_user(&[0.3, 0.5]);
        assert!(payoff(&game, &StrategyProfile::new(vec![0]), 0).is_err());
        assert!(payoff(&game, &StrategyProfile::new(vec![0, 1]), 0).is_err());
        assert!(payoff(&game, &StrategyProfile::new(vec![0, 0]), 2).is_err());
    }
}
