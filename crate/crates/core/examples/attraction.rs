//! Attraction probabilities of a single user, checked against the
//! threshold-sampling process that defines them.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shapley_facility::prelude::*;

fn main() -> Result<()> {
    let sims = [0.6, 0.3, 0.3];
    let r = shapley_attraction(&sims)?;
    println!("similarities  {sims:?}");
    println!("probabilities {:?}  none {:.4}", r.probabilities, r.none_probability);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let trials = 200_000;
    let mut counts = [0usize; 4];
    for _ in 0..trials {
        match simulate_choice(&sims, &mut rng)? {
            Some(i) => counts[i] += 1,
            None => counts[3] += 1,
        }
    }
    let freq: Vec<f64> = counts.iter().map(|&c| c as f64 / trials as f64).collect();
    println!("sampled       {:.4?}  none {:.4}", &freq[..3], freq[3]);
    Ok(())
}
