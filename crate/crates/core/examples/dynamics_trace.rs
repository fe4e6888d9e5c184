use shapley_facility::prelude::*;
use shapley_facility::scenarios::segment_game_with_players;

// Three players on a 60-point segment; every move raises the potential.
fn main() -> Result<()> {
    let game = segment_game_with_players(60, 3)?;
    let start = StrategyProfile::new(vec![0, 0, 59]);
    let eps = 0.02;
    for rule in [
        MoverRule::LowestIndex,
        MoverRule::RoundRobin,
        MoverRule::SeededRandom(7),
    ] {
        let config = DynamicsConfig {
            mover_rule: rule,
            ..DynamicsConfig::new(eps)
        };
        let trace = run_dynamics(&game, &start, &config)?;
        println!(
            "{rule:?}: {} moves (bound {:?}), potential {:.5} -> {:.5}, final {}",
            trace.iterations,
            trace.iteration_bound,
            trace.initial_potential,
            trace.final_potential,
            trace.final_profile
        );
        for s in trace.steps.iter().take(4) {
            println!(
                "  player {} {} -> {}  payoff {:.5} -> {:.5}",
                s.mover, s.from, s.to, s.payoff_before, s.payoff_after
            );
        }
        assert!(is_epsilon_pne(&game, &trace.final_profile, eps)?);
    }
    Ok(())
}
