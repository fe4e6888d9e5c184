//! The cooperative game induced by a profile: coalition values are the
//! weighted maximum similarity users obtain from the coalition's facilities.
//! Brute-force Shapley values over all join orders, plus the set-function
//! view of welfare used by the submodularity and marginal-payoff checks.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{Game, StrategyProfile};
use crate::values::Evaluator;

/// Largest player count accepted by [`shapley_values`].
pub const MAX_SHAPLEY_PLAYERS: usize = 10;

/// Subset of players, stored as a bit mask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Coalition(u64);

impl Coalition {
    pub fn empty() -> Self {
        Self(0)
    }

    pub fn grand(n: usize) -> Self {
        debug_assert!(n < 64);
        Self((1u64 << n) - 1)
    }

    pub fn from_members(members: impl IntoIterator<Item = usize>) -> Self {
        Self(members.into_iter().fold(0, |mask, i| mask | (1u64 << i)))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, player: usize) -> bool {
        self.0 & (1u64 << player) != 0
    }

    pub fn with(self, player: usize) -> Self {
        Self(self.0 | (1u64 << player))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

fn user_coalition_value(game: &Game, profile: &StrategyProfile, user: usize, coalition: Coalition) -> f64 {
    coalition
        .members()
        .map(|i| game.sim(i, user, profile.get(i)))
        .fold(0.0, f64::max)
}

/// `V(C; x)`; zero for the empty coalition.
pub fn characteristic(game: &Game, profile: &StrategyProfile, coalition: Coalition) -> Result<f64> {
    game.check_profile(profile)?;
    if let Some(i) = coalition.members().find(|&i| i >= game.n_players()) {
        game.check_player(i)?;
    }
    Ok((0..game.n_users())
        .map(|u| game.users().weight(u) * user_coalition_value(game, profile, u, coalition))
        .sum())
}

/// Visits every permutation of `0..n` (Heap's algorithm).
fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    visit(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Shapley values of all players: the average marginal contribution
/// `V(P ∪ {i}) - V(P)` over all `n!` join orders, where `P` are the
/// players preceding `i`.
pub fn shapley_values(game: &Game, profile: &StrategyProfile) -> Result<Vec<f64>> {
    game.check_profile(profile)?;
    let n = game.n_players();
    if n > MAX_SHAPLEY_PLAYERS {
        return Err(Error::Capacity {
            what: "Shapley permutation enumeration (players)",
            required: n as u128,
            limit: MAX_SHAPLEY_PLAYERS as u128,
        });
    }
    // coalition values are looked up, every join order is still visited
    let values: Vec<f64> = (0..1u64 << n)
        .map(|mask| {
            (0..game.n_users())
                .map(|u| game.users().weight(u) * user_coalition_value(game, profile, u, Coalition(mask)))
                .sum()
        })
        .collect();
    let mut totals = vec![0.0; n];
    let mut count = 0u64;
    for_each_permutation(n, |perm| {
        let mut mask = 0u64;
        for &i in perm {
            let next = mask | (1u64 << i);
            totals[i] += values[next as usize] - values[mask as usize];
            mask = next;
        }
        count += 1;
    });
    Ok(totals.into_iter().map(|t| t / count as f64).collect())
}

pub fn shapley_value(game: &Game, profile: &StrategyProfile, player: usize) -> Result<f64> {
    game.check_player(player)?;
    Ok(shapley_values(game, profile)?[player])
}

// ---------------------------------------------------------------------------
// Set-function view

/// A facility placed by `player` at her candidate `location`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Facility {
    pub player: usize,
    pub location: usize,
}

/// Facilities of a profile, optionally leaving one player out.
pub fn profile_facilities(profile: &StrategyProfile, without: Option<usize>) -> Vec<Facility> {
    profile
        .choices()
        .iter()
        .enumerate()
        .filter(|(p, _)| Some(*p) != without)
        .map(|(player, &location)| Facility { player, location })
        .collect()
}

/// `v_u(A)`: best similarity user `u` gets from the facility set `A`.
/// Duplicates collapse since only the maximum matters.
pub fn set_user_value(game: &Game, user: usize, facilities: &[Facility]) -> f64 {
    facilities
        .iter()
        .map(|f| game.sim(f.player, user, f.location))
        .fold(0.0, f64::max)
}

/// `V(A) = sum_u f(u) v_u(A)`.
pub fn set_welfare(game: &Game, facilities: &[Facility]) -> f64 {
    (0..game.n_users())
        .map(|u| game.users().weight(u) * set_user_value(game, u, facilities))
        .sum()
}

fn check_facilities(game: &Game, facilities: &[Facility]) -> Result<()> {
    facilities
        .iter()
        .try_for_each(|f| game.check_location(f.player, f.location))
}

/// Tolerance for comparisons between separately rounded weighted sums.
pub const SET_FUNCTION_TOLERANCE: f64 = 1e-12;

/// First failing user (`None` means the aggregated welfare) and the two
/// marginal gains.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubmodularViolation {
    pub user: Option<usize>,
    pub gain_on_smaller: f64,
    pub gain_on_larger: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubmodularReport {
    pub checks: usize,
    pub violation: Option<SubmodularViolation>,
}

impl SubmodularReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

fn first_violation(
    game: &Game,
    smaller: &[Facility],
    larger: &[Facility],
    omega: Facility,
) -> Option<SubmodularViolation> {
    let mut small_plus = smaller.to_vec();
    small_plus.push(omega);
    let mut large_plus = larger.to_vec();
    large_plus.push(omega);

    let gains = |user: usize| {
        (
            set_user_value(game, user, &small_plus) - set_user_value(game, user, smaller),
            set_user_value(game, user, &large_plus) - set_user_value(game, user, larger),
        )
    };
    for u in 0..game.n_users() {
        let (a, b) = gains(u);
        if a < b - SET_FUNCTION_TOLERANCE {
            return Some(SubmodularViolation {
                user: Some(u),
                gain_on_smaller: a,
                gain_on_larger: b,
            });
        }
    }
    let a = set_welfare(game, &small_plus) - set_welfare(game, smaller);
    let b = set_welfare(game, &large_plus) - set_welfare(game, larger);
    (a < b - SET_FUNCTION_TOLERANCE).then_some(SubmodularViolation {
        user: None,
        gain_on_smaller: a,
        gain_on_larger: b,
    })
}

/// Checks `v(A ∪ {w}) - v(A) >= v(B ∪ {w}) - v(B)` for every user and for
/// the aggregated welfare, where `A ⊆ B`.
pub fn check_submodular(
    game: &Game,
    smaller: &[Facility],
    larger: &[Facility],
    omega: Facility,
) -> Result<SubmodularReport> {
    check_facilities(game, smaller)?;
    check_facilities(game, larger)?;
    check_facilities(game, &[omega])?;
    if let Some(f) = smaller.iter().find(|f| !larger.contains(f)) {
        return Err(Error::Config(format!(
            "facility {f:?} of the smaller set is missing from the larger set"
        )));
    }
    Ok(SubmodularReport {
        checks: 1,
        violation: first_violation(game, smaller, larger, omega),
    })
}

/// Runs [`check_submodular`] on `samples` random chains `A ⊆ B` and test
/// facilities, stopping at the first violation.
pub fn sample_submodularity<R: Rng + ?Sized>(game: &Game, samples: usize, rng: &mut R) -> SubmodularReport {
    let all: Vec<Facility> = (0..game.n_players())
        .flat_map(|player| (0..game.n_locations(player)).map(move |location| Facility { player, location }))
        .collect();
    for k in 0..samples {
        let mut pool = all.clone();
        pool.shuffle(rng);
        let large_len = rng.gen_range(0..pool.len());
        let small_len = rng.gen_range(0..=large_len);
        let omega = pool[pool.len() - 1];
        let larger = &pool[..large_len];
        let smaller = &larger[..small_len];
        if let Some(v) = first_violation(game, smaller, larger, omega) {
            return SubmodularReport {
                checks: k + 1,
                violation: Some(v),
            };
        }
    }
    SubmodularReport {
        checks: samples,
        violation: None,
    }
}

/// Both sides of the marginal-payoff inequality
/// `pi_i(x) >= V({x_i})/n + (n-1)/n (V(x) - V(x_{-i}))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MarginalBound {
    pub payoff: f64,
    pub bound: f64,
}

impl MarginalBound {
    pub fn holds(&self, tolerance: f64) -> bool {
        self.payoff >= self.bound - tolerance
    }
}

pub fn marginal_payoff_bound(game: &Game, profile: &StrategyProfile, player: usize) -> Result<MarginalBound> {
    game.check_profile(profile)?;
    game.check_player(player)?;
    let n = game.n_players() as f64;
    let own = [Facility {
        player,
        location: profile.get(player),
    }];
    let full = set_welfare(game, &profile_facilities(profile, None));
    let others = set_welfare(game, &profile_facilities(profile, Some(player)));
    Ok(MarginalBound {
        payoff: Evaluator::new(game).payoff(profile, player),
        bound: set_welfare(game, &own) / n + (n - 1.0) / n * (full - others),
    })
}
