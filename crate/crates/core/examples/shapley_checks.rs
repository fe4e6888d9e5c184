//! Payoffs equal brute-force Shapley values of the welfare game, and
//! welfare is submodular in the set of open facilities.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shapley_facility::coop::sample_submodularity;
use shapley_facility::prelude::*;
use shapley_facility::scenarios::segment_game_with_players;

fn main() -> Result<()> {
    let game = segment_game_with_players(25, 5)?;
    let x = StrategyProfile::new(vec![2, 7, 7, 15, 24]);
    let pay = payoffs(&game, &x)?;
    let phi = shapley_values(&game, &x)?;
    println!("profile {x}");
    for (i, (a, b)) in pay.iter().zip(&phi).enumerate() {
        println!("  player {i}: payoff {a:.12}  shapley {b:.12}");
    }
    println!(
        "welfare {:.12} = sum {:.12}",
        social_welfare(&game, &x)?,
        pay.iter().sum::<f64>()
    );

    for i in 0..game.n_players() {
        let b = marginal_payoff_bound(&game, &x, i)?;
        println!("  player {i}: payoff {:.6} >= {:.6}", b.payoff, b.bound);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let report = sample_submodularity(&game, 2000, &mut rng);
    println!(
        "submodularity: {} checks, violation {:?}",
        report.checks, report.violation
    );
    Ok(())
}
