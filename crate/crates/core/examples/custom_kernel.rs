//! A 2-D game with a user-supplied similarity kernel, exported to JSON and
//! rebuilt. Custom kernels are exported as explicit tables, so the rebuilt
//! game gives identical values.

use shapley_facility::game::distance;
use shapley_facility::prelude::*;

fn main() -> Result<()> {
    let grid: Vec<Point> = (0..5)
        .flat_map(|i| (0..5).map(move |j| vec![i as f64 / 4.0, j as f64 / 4.0]))
        .collect();
    let users = UserSpace::uniform(grid.clone())?;
    let kernel = Kernel::new("gaussian", |u, t| (-4.0 * distance(u, t).powi(2)).exp());
    let game = Game::symmetric(users, 3, grid, SimilarityModel::Custom(kernel))?;

    let start = StrategyProfile::new(vec![0, 0, 0]);
    let trace = run_dynamics(&game, &start, &DynamicsConfig::new(0.01))?;
    let x = trace.final_profile;
    for p in 0..3 {
        println!("player {p} at {:?}", game.locations(p)[x.get(p)]);
    }

    let json = game.to_config().to_json();
    let rebuilt = build_game(&GameConfig::from_json(&json)?)?;
    let (a, b) = (evaluate(&game, &x)?, evaluate(&rebuilt, &x)?);
    println!(
        "config is {} bytes; values identical after round trip: {}",
        json.len(),
        a == b
    );
    println!("welfare {:.6}, potential {:.6}", a.welfare, a.potential);
    Ok(())
}
