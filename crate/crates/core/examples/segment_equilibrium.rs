//! Two players on the unit segment: closed-form payoffs and potential, the
//! exact grid equilibria, and where ε-dynamics stop.

use shapley_facility::prelude::*;
use shapley_facility::scenarios::segment_grid_index;

fn main() -> Result<()> {
    let (p1, p2) = segment_payoff_closed(0.375, 0.625)?;
    println!(
        "closed form at (3/8, 5/8): payoffs {p1:.6} {p2:.6}, potential {:.6}",
        segment_potential_closed(0.375, 0.625)
    );

    let m = 40;
    let game = segment_game(m)?;
    let x = StrategyProfile::new(vec![segment_grid_index(m, 0.375), segment_grid_index(m, 0.625)]);
    let v = evaluate(&game, &x)?;
    println!(
        "grid m={m} near (3/8, 5/8): payoffs {:.6?}, potential {:.6}",
        v.payoffs, v.potential
    );

    let point = |p: usize, l: usize| game.locations(p)[l][0];
    let eq = enumerate_pne(&game, 0.0)?;
    println!("{} exact equilibria:", eq.len());
    for e in &eq {
        println!("  ({:.4}, {:.4})", point(0, e.get(0)), point(1, e.get(1)));
    }

    // a coarse ε leaves a wide band of approximate equilibria
    for eps in [1e-2, 1e-4] {
        let start = StrategyProfile::new(vec![0, m - 1]);
        let trace = run_dynamics(&game, &start, &DynamicsConfig::new(eps))?;
        let f = &trace.final_profile;
        println!(
            "ε={eps:e}: {} moves, stops at ({:.4}, {:.4})",
            trace.iterations,
            point(0, f.get(0)),
            point(1, f.get(1))
        );
    }
    Ok(())
}
