use shapley_facility::prelude::*;

// Players with different reach compete for users spread on a line; the
// short-range player ends up where the long-range one leaves users alone.
fn main() -> Result<()> {
    let points: Vec<Point> = (0..11).map(|k| vec![k as f64 / 10.0]).collect();
    let game = limited_attraction_instance(points.clone(), &[0.45, 0.15], vec![points])?;
    let eq = enumerate_pne(&game, 0.0)?;
    for x in &eq {
        let v = evaluate(&game, x)?;
        println!(
            "long-range at {:.1}, short-range at {:.1}: payoffs {:.4?}, welfare {:.4}",
            game.locations(0)[x.get(0)][0],
            game.locations(1)[x.get(1)][0],
            v.payoffs,
            v.welfare
        );
    }
    Ok(())
}
