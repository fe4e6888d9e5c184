//! The instance on which the worst equilibrium loses exactly the factor
//! `(2n - 1)/n`, plus a random limited-attraction game for contrast.

use shapley_facility::prelude::*;

fn main() -> Result<()> {
    for n in 2..=5 {
        let report = price_of_anarchy(&poa_tight_instance(n)?, 0.0)?;
        println!(
            "n={n}: optimum {:.4} at {}, worst equilibrium {:.4} at {}, PoA {:.4} (bound {:.4})",
            report.optimal_welfare,
            report.optimal_profile,
            report.worst_equilibrium_welfare,
            report.worst_equilibrium,
            report.poa,
            report.bound
        );
    }

    let points: Vec<Point> = (0..8).map(|k| vec![k as f64 / 7.0]).collect();
    let game = limited_attraction_instance(points.clone(), &[0.2, 0.2, 0.2], vec![points])?;
    let report = price_of_anarchy(&game, 0.0)?;
    println!(
        "limited attraction, 3 players: {} equilibria, PoA {:.4} (bound {:.4})",
        report.equilibria.len(),
        report.poa,
        report.bound
    );
    Ok(())
}
