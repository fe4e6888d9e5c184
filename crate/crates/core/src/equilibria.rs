//! Equilibrium checks, exhaustive enumeration of pure equilibria over the
//! candidate sets, and Price of Anarchy reports.

use serde::Serialize;

use crate::dynamics::{deviation_with, Deviation};
use crate::error::{Error, Result};
use crate::game::{Game, StrategyProfile};
use crate::values::Evaluator;

/// Default cap on the number of profiles visited by exhaustive searches.
pub const DEFAULT_PROFILE_CAP: u128 = 10_000_000;

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon >= 0.0 && epsilon.is_finite() {
        Ok(())
    } else {
        Err(Error::Config(format!("epsilon {epsilon} must be a finite value >= 0")))
    }
}

/// First player (lowest index) with a `(1 + ε)`-profitable deviation.
pub fn find_deviation(game: &Game, profile: &StrategyProfile, epsilon: f64) -> Result<Option<Deviation>> {
    game.check_profile(profile)?;
    check_epsilon(epsilon)?;
    let mut ev = Evaluator::new(game);
    Ok((0..game.n_players()).find_map(|i| deviation_with(&mut ev, game, profile, i, epsilon)))
}

/// True iff no player can improve her payoff by more than a factor
/// `1 + ε` over her candidate set. `ε = 0` tests for an exact equilibrium.
pub fn is_epsilon_pne(game: &Game, profile: &StrategyProfile, epsilon: f64) -> Result<bool> {
    Ok(find_deviation(game, profile, epsilon)?.is_none())
}

/// Lexicographic walk over all profiles.
pub(crate) fn for_each_profile(game: &Game, mut visit: impl FnMut(&StrategyProfile)) {
    let n = game.n_players();
    let mut profile = StrategyProfile::new(vec![0; n]);
    loop {
        visit(&profile);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            let next = profile.get(i) + 1;
            if next < game.n_locations(i) {
                profile.set(i, next);
                break;
            }
            profile.set(i, 0);
        }
    }
}

fn check_cap(game: &Game, cap: u128) -> Result<()> {
    let required = game.profile_count();
    if required > cap {
        return Err(Error::Capacity {
            what: "profile enumeration",
            required,
            limit: cap,
        });
    }
    Ok(())
}

/// All ε-equilibria in lexicographic order, visiting at most `cap`
/// profiles.
pub fn enumerate_pne_with_cap(game: &Game, epsilon: f64, cap: u128) -> Result<Vec<StrategyProfile>> {
    check_epsilon(epsilon)?;
    check_cap(game, cap)?;
    let mut ev = Evaluator::new(game);
    let mut found = Vec::new();
    for_each_profile(game, |x| {
        if (0..game.n_players()).all(|i| deviation_with(&mut ev, game, x, i, epsilon).is_none()) {
            found.push(x.clone());
        }
    });
    Ok(found)
}

pub fn enumerate_pne(game: &Game, epsilon: f64) -> Result<Vec<StrategyProfile>> {
    enumerate_pne_with_cap(game, epsilon, DEFAULT_PROFILE_CAP)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PoAReport {
    pub epsilon: f64,
    pub optimal_profile: StrategyProfile,
    pub optimal_welfare: f64,
    pub equilibria: Vec<StrategyProfile>,
    pub worst_equilibrium: StrategyProfile,
    pub worst_equilibrium_welfare: f64,
    pub poa: f64,
    /// `(2n - 1) / n`
    pub bound: f64,
}

impl PoAReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One equilibrium profile per row.
    pub fn equilibria_csv(&self) -> String {
        equilibria_csv(&self.equilibria)
    }
}

pub fn equilibria_csv(profiles: &[StrategyProfile]) -> String {
    let n = profiles.first().map_or(0, |p| p.len());
    let mut out = (0..n).map(|i| format!("player_{i}")).collect::<Vec<_>>().join(",");
    out.push('\n');
    for p in profiles {
        let row: Vec<String> = p.choices().iter().map(|c| c.to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// `(2n - 1) / n`
pub fn poa_bound(n: usize) -> f64 {
    (2.0 * n as f64 - 1.0) / n as f64
}

/// `optimal / worst`, with `0 / 0 = 1`.
pub fn welfare_ratio(optimal: f64, worst: f64) -> f64 {
    if optimal == 0.0 && worst == 0.0 {
        1.0
    } else {
        optimal / worst
    }
}

pub fn price_of_anarchy_with_cap(game: &Game, epsilon: f64, cap: u128) -> Result<PoAReport> {
    check_epsilon(epsilon)?;
    check_cap(game, cap)?;
    let mut ev = Evaluator::new(game);
    let mut best: Option<(StrategyProfile, f64)> = None;
    for_each_profile(game, |x| {
        let v = ev.welfare(x);
        if best.as_ref().is_none_or(|(_, b)| v > *b) {
            best = Some((x.clone(), v));
        }
    });
    let (optimal_profile, optimal_welfare) = best.expect("at least one profile");

    let equilibria = enumerate_pne_with_cap(game, epsilon, cap)?;
    let mut worst: Option<(StrategyProfile, f64)> = None;
    for x in &equilibria {
        let v = ev.welfare(x);
        if worst.as_ref().is_none_or(|(_, w)| v < *w) {
            worst = Some((x.clone(), v));
        }
    }
    let Some((worst_equilibrium, worst_equilibrium_welfare)) = worst else {
        return Err(Error::Internal(
            "no pure equilibrium found on a finite potential game".into(),
        ));
    };
    Ok(PoAReport {
        epsilon,
        optimal_profile,
        optimal_welfare,
        poa: welfare_ratio(optimal_welfare, worst_equilibrium_welfare),
        equilibria,
        worst_equilibrium,
        worst_equilibrium_welfare,
        bound: poa_bound(game.n_players()),
    })
}

/// Price of Anarchy over the ε-equilibria of the finite game (exact
/// equilibria when `ε = 0`).
pub fn price_of_anarchy(game: &Game, epsilon: f64) -> Result<PoAReport> {
    price_of_anarchy_with_cap(game, epsilon, DEFAULT_PROFILE_CAP)
}
