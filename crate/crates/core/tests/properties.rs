mod common;

use common::{random_game, random_profile, random_table_game, Shape};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shapley_facility::coop::{profile_facilities, set_welfare};
use shapley_facility::prelude::*;

const SMALL: Shape = Shape {
    max_players: 4,
    max_users: 6,
    max_locations: 5,
};

fn game_and_profile(seed: u64) -> (Game, StrategyProfile, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let game = random_game(&mut rng, &SMALL);
    let x = random_profile(&mut rng, &game);
    (game, x, rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn payoffs_are_shapley_values(seed in any::<u64>()) {
        let (game, x, _) = game_and_profile(seed);
        let pay = payoffs(&game, &x).unwrap();
        let phi = shapley_values(&game, &x).unwrap();
        for (a, b) in pay.iter().zip(&phi) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
        // efficiency of the Shapley split
        let total: f64 = pay.iter().sum();
        prop_assert!((total - social_welfare(&game, &x).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn potential_is_exact(seed in any::<u64>()) {
        let (game, x, mut rng) = game_and_profile(seed);
        let player = rand::Rng::gen_range(&mut rng, 0..game.n_players());
        let to = rand::Rng::gen_range(&mut rng, 0..game.n_locations(player));
        let y = x.with_move(player, to);
        let dpay = payoff(&game, &y, player).unwrap() - payoff(&game, &x, player).unwrap();
        let dphi = potential(&game, &y).unwrap() - potential(&game, &x).unwrap();
        prop_assert!((dpay - dphi).abs() <= 1e-12);
    }

    #[test]
    fn value_ranges(seed in any::<u64>()) {
        let (game, x, _) = game_and_profile(seed);
        let v = evaluate(&game, &x).unwrap();
        let n = game.n_players();
        prop_assert!(v.welfare >= 0.0 && v.welfare <= 1.0 + 1e-12);
        prop_assert!(v.potential >= v.welfare - 1e-12);
        prop_assert!(v.potential <= harmonic(n) * v.welfare + 1e-12);
        prop_assert!(v.payoffs.iter().all(|&p| p >= 0.0));
    }

    #[test]
    fn welfare_is_monotone_in_facilities(seed in any::<u64>()) {
        let (game, x, _) = game_and_profile(seed);
        let all = profile_facilities(&x, None);
        for i in 0..game.n_players() {
            let fewer = profile_facilities(&x, Some(i));
            prop_assert!(set_welfare(&game, &fewer) <= set_welfare(&game, &all) + 1e-12);
            let bound = marginal_payoff_bound(&game, &x, i).unwrap();
            prop_assert!(bound.holds(1e-12));
        }
    }

    #[test]
    fn dynamics_end_in_epsilon_equilibria(seed in any::<u64>(), eps in 0.01f64..0.5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let game = random_table_game(&mut rng, &SMALL, Some(true));
        let x = random_profile(&mut rng, &game);
        for rule in [MoverRule::LowestIndex, MoverRule::RoundRobin, MoverRule::SeededRandom(seed)] {
            let config = DynamicsConfig { mover_rule: rule, ..DynamicsConfig::new(eps) };
            let trace = run_dynamics(&game, &x, &config).unwrap();
            prop_assert!(trace.converged);
            prop_assert!(is_epsilon_pne(&game, &trace.final_profile, eps).unwrap());
            for s in &trace.steps {
                prop_assert!(s.payoff_after > (1.0 + eps) * s.payoff_before || s.payoff_before == 0.0);
                prop_assert!(s.potential_after > s.potential_before);
            }
            if let Some(b) = trace.iteration_bound {
                prop_assert!(trace.iterations as u64 <= b);
            }
        }
    }

    #[test]
    fn enumerated_equilibria_respect_the_bound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let game = random_table_game(&mut rng, &SMALL, None);
        let report = price_of_anarchy(&game, 0.0).unwrap();
        prop_assert!(!report.equilibria.is_empty());
        for eq in &report.equilibria {
            prop_assert!(is_epsilon_pne(&game, eq, 0.0).unwrap());
        }
        prop_assert!(report.poa >= 1.0 - 1e-12);
        prop_assert!(report.poa <= report.bound + 1e-9);
    }

    #[test]
    fn config_round_trip(seed in any::<u64>()) {
        let (game, x, _) = game_and_profile(seed);
        let rebuilt = build_game(&GameConfig::from_json(&game.to_config().to_json()).unwrap()).unwrap();
        prop_assert_eq!(evaluate(&game, &x).unwrap(), evaluate(&rebuilt, &x).unwrap());
    }
}

#[test]
fn segment_grid_equilibria_sit_next_to_three_eighths() {
    let m = 40;
    let game = segment_game(m).unwrap();
    let eq = enumerate_pne(&game, 0.0).unwrap();
    assert!(!eq.is_empty());
    let cell = 1.0 / m as f64;
    for x in &eq {
        let mut pts: Vec<f64> = (0..2).map(|p| game.locations(p)[x.get(p)][0]).collect();
        pts.sort_by(f64::total_cmp);
        assert!(
            (pts[0] - 0.375).abs() <= cell && (pts[1] - 0.625).abs() <= cell,
            "{pts:?}"
        );
    }
}
