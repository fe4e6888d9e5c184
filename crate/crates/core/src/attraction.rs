//! The Shapley attraction function and a sampler of the threshold choice
//! process it describes.
//!
//! A user draws a satisfaction threshold `Y ~ U[0, 1]` and picks uniformly
//! among the facilities whose similarity is at least `Y`, or none of them
//! if no facility qualifies. With the similarities sorted ascending as
//! `s_1 <= ... <= s_n` (and `s_0 = 0`), player `i` sitting at sorted rank
//! `r_i` is chosen with probability
//!
//! ```text
//! mu_i = sum_{j=1}^{r_i} (s_j - s_{j-1}) / (n - j + 1)
//! ```

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Per-player selection probabilities for one user.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttractionResult {
    pub probabilities: Vec<f64>,
    #[serde(rename = "none")]
    pub none_probability: f64,
}

fn validate(similarities: &[f64]) -> Result<()> {
    if similarities.is_empty() {
        return Err(Error::EmptySimilarities);
    }
    match similarities.iter().position(|s| !(0.0..=1.0).contains(s)) {
        Some(position) => Err(Error::InvalidSimilarity {
            position,
            value: similarities[position],
        }),
        None => Ok(()),
    }
}

/// Reusable buffers for the per-user computations in hot loops.
#[derive(Debug, Default, Clone)]
pub(crate) struct Scratch {
    pub order: Vec<usize>,
    pub mu: Vec<f64>,
}

/// Sorts player indices by ascending similarity (stable).
pub(crate) fn sort_ascending(similarities: &[f64], order: &mut Vec<usize>) {
    order.clear();
    order.extend(0..similarities.len());
    order.sort_by(|&a, &b| similarities[a].total_cmp(&similarities[b]));
}

/// Writes `mu_i` for every player into `scratch.mu`. Inputs are assumed
/// valid. All members of a tie group receive the same accumulated value,
/// which equals taking the largest tied rank.
pub(crate) fn attraction_into(similarities: &[f64], scratch: &mut Scratch) {
    let n = similarities.len();
    sort_ascending(similarities, &mut scratch.order);
    let order = &scratch.order;
    let mu = &mut scratch.mu;
    mu.clear();
    mu.resize(n, 0.0);

    let mut acc = 0.0;
    let mut prev = 0.0;
    let mut j = 0;
    while j < n {
        let value = similarities[order[j]];
        // rank j+1 (1-based) divides by n - (j+1) + 1
        acc += (value - prev) / (n - j) as f64;
        let mut end = j;
        while end < n && similarities[order[end]] == value {
            mu[order[end]] = acc;
            end += 1;
        }
        prev = value;
        j = end;
    }
}

/// Exact Shapley attraction probabilities for one user.
pub fn shapley_attraction(similarities: &[f64]) -> Result<AttractionResult> {
    validate(similarities)?;
    let mut scratch = Scratch::default();
    attraction_into(similarities, &mut scratch);
    let max = similarities.iter().copied().fold(0.0, f64::max);
    Ok(AttractionResult {
        probabilities: scratch.mu,
        none_probability: 1.0 - max,
    })
}

/// Number of players whose similarity is at least `y`.
pub fn coverage_count(similarities: &[f64], y: f64) -> Result<usize> {
    validate(similarities)?;
    if !(0.0..=1.0).contains(&y) {
        return Err(Error::Config(format!("threshold {y} outside [0, 1]")));
    }
    Ok(similarities.iter().filter(|&&s| y <= s).count())
}

/// Samples one choice of the threshold process: `Some(player)` or `None`
/// when no facility satisfies the drawn threshold.
pub fn simulate_choice<R: Rng + ?Sized>(similarities: &[f64], rng: &mut R) -> Result<Option<usize>> {
    validate(similarities)?;
    let y: f64 = rng.gen();
    Ok(choose_with_threshold(similarities, y, rng))
}

/// Same as [`simulate_choice`] with the threshold `y` fixed by the caller;
/// only the tie-breaking coin uses `rng`.
pub fn simulate_choice_with_threshold<R: Rng + ?Sized>(
    similarities: &[f64],
    y: f64,
    rng: &mut R,
) -> Result<Option<usize>> {
    validate(similarities)?;
    Ok(choose_with_threshold(similarities, y, rng))
}

fn choose_with_threshold<R: Rng + ?Sized>(similarities: &[f64], y: f64, rng: &mut R) -> Option<usize> {
    let count = similarities.iter().filter(|&&s| y <= s).count();
    if count == 0 {
        return None;
    }
    let pick = rng.gen_range(0..count);
    similarities
        .iter()
        .enumerate()
        .filter(|(_, &s)| y <= s)
        .nth(pick)
        .map(|(i, _)| i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Independent route: integrate 1/c(y) over (0, s_i] piecewise, where
    /// the coverage count is constant between consecutive distinct values.
    fn integral_oracle(sims: &[f64], i: usize) -> f64 {
        let mut cuts: Vec<f64> = sims.iter().copied().filter(|&s| s <= sims[i]).collect();
        cuts.push(0.0);
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        cuts.windows(2)
            .map(|w| {
                let c = sims.iter().filter(|&&s| s >= w[1]).count();
                (w[1] - w[0]) / c as f64
            })
            .sum()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn three_player_example() {
        let r = shapley_attraction(&[0.3, 0.5, 0.7]).unwrap();
        for (got, want) in r.probabilities.iter().zip([0.1, 0.2, 0.4]) {
            assert!(close(*got, want, 1e-12), "{got} vs {want}");
        }
        assert!(close(r.none_probability, 0.3, 1e-12));
    }

    #[test]
    fn ties_and_null_player() {
        let r = shapley_attraction(&[0.5, 0.5]).unwrap();
        assert_eq!(r.probabilities, vec![0.25, 0.25]);
        assert_eq!(r.none_probability, 0.5);

        let r = shapley_attraction(&[0.0, 0.8]).unwrap();
        assert_eq!(r.probabilities, vec![0.0, 0.8]);
        assert!(close(r.none_probability, 0.2, 1e-15));
    }

    #[test]
    fn rejects_invalid_input() {
        assert_eq!(shapley_attraction(&[]).unwrap_err(), Error::EmptySimilarities);
        assert!(matches!(
            shapley_attraction(&[0.2, 1.5]),
            Err(Error::InvalidSimilarity { position: 1, .. })
        ));
        assert!(shapley_attraction(&[f64::NAN]).is_err());
    }

    #[test]
    fn coverage_examples() {
        assert_eq!(coverage_count(&[0.3, 0.5, 0.7], 0.4).unwrap(), 2);
        assert_eq!(coverage_count(&[0.3, 0.5, 0.7], 0.0).unwrap(), 3);
        assert_eq!(coverage_count(&[0.3, 0.5, 0.7], 0.8).unwrap(), 0);
        // closed half-line: y equal to a similarity still counts
        assert_eq!(coverage_count(&[0.3, 0.5, 0.7], 0.5).unwrap(), 2);
    }

    #[test]
    fn forced_thresholds() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let sims = [0.3, 0.5, 0.7];
        assert_eq!(simulate_choice_with_threshold(&sims, 0.6, &mut rng).unwrap(), Some(2));
        assert_eq!(simulate_choice_with_threshold(&sims, 0.9, &mut rng).unwrap(), None);
        for _ in 0..50 {
            let c = simulate_choice_with_threshold(&sims, 0.4, &mut rng).unwrap();
            assert!(matches!(c, Some(1) | Some(2)));
        }
    }

    #[test]
    fn simulation_is_reproducible() {
        let sims = [0.3, 0.5, 0.7];
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..100)
                .map(|_| simulate_choice(&sims, &mut rng).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
    }

    #[test]
    fn monte_carlo_matches_exact() {
        let sims = [0.3, 0.5, 0.7];
        let trials = 1_000_000;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut counts = [0usize; 4];
        for _ in 0..trials {
            match simulate_choice(&sims, &mut rng).unwrap() {
                Some(i) => counts[i] += 1,
                None => counts[3] += 1,
            }
        }
        for (count, p) in counts.iter().zip([0.1, 0.2, 0.4, 0.3]) {
            let freq = *count as f64 / trials as f64;
            let se = (p * (1.0 - p) / trials as f64).sqrt();
            assert!((freq - p).abs() <= 3.0 * se, "freq {freq} vs {p}");
        }
    }

    fn sims_strategy() -> impl Strategy<Value = Vec<f64>> {
        // coarse grid values make ties common
        prop::collection::vec(
            prop_oneof![(0u32..=10).prop_map(|k| k as f64 / 10.0), 0.0f64..=1.0],
            1..8,
        )
    }

    proptest! {
        #[test]
        fn efficiency_and_bounds(sims in sims_strategy()) {
            let r = shapley_attraction(&sims).unwrap();
            let max = sims.iter().copied().fold(0.0, f64::max);
            let total: f64 = r.probabilities.iter().sum();
            prop_assert!(close(total, max, 1e-12));
            prop_assert!(close(total + r.none_probability, 1.0, 1e-12));
            for (mu, s) in r.probabilities.iter().zip(&sims) {
                prop_assert!(*mu >= 0.0 && *mu <= s + 1e-15);
            }
        }

        #[test]
        fn matches_threshold_integral(sims in sims_strategy()) {
            let r = shapley_attraction(&sims).unwrap();
            for i in 0..sims.len() {
                prop_assert!(close(r.probabilities[i], integral_oracle(&sims, i), 1e-12));
            }
        }

        #[test]
        fn anonymity(sims in sims_strategy(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            let mut perm: Vec<usize> = (0..sims.len()).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let permuted: Vec<f64> = perm.iter().map(|&p| sims[p]).collect();
            let a = shapley_attraction(&sims).unwrap();
            let b = shapley_attraction(&permuted).unwrap();
            for (k, &p) in perm.iter().enumerate() {
                // tied entries get bitwise identical values regardless of order
                prop_assert!(close(b.probabilities[k], a.probabilities[p], 1e-15));
            }
        }

        #[test]
        fn ties_get_equal_share(sims in sims_strategy()) {
            let r = shapley_attraction(&sims).unwrap();
            for i in 0..sims.len() {
                for j in 0..sims.len() {
                    if sims[i] == sims[j] {
                        prop_assert_eq!(r.probabilities[i], r.probabilities[j]);
                    }
                }
            }
        }

        #[test]
        fn monotone_in_own_similarity(sims in sims_strategy(), bump in 0.0f64..=1.0, idx in any::<prop::sample::Index>()) {
            let i = idx.index(sims.len());
            let mut raised = sims.clone();
            raised[i] = sims[i] + (1.0 - sims[i]) * bump;
            let before = shapley_attraction(&sims).unwrap().probabilities[i];
            let after = shapley_attraction(&raised).unwrap().probabilities[i];
            prop_assert!(after >= before - 1e-15);
        }
    }
}
