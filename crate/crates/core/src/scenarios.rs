//! Concrete game families: the two-player unit segment with its closed
//! forms, the instance attaining the Price of Anarchy bound, and the
//! limited-attraction model.

use crate::error::{Error, Result};
use crate::game::{Game, Point, SimilarityModel, UserSpace};

/// Two players on `[0, 1]` with uniform users discretized at `m` midpoints,
/// similarity `1 - |u - t|`, and the user grid as shared candidate set.
pub fn segment_game(m: usize) -> Result<Game> {
    segment_game_with_players(m, 2)
}

pub fn segment_game_with_players(m: usize, players: usize) -> Result<Game> {
    if m < 2 {
        return Err(Error::Config(format!("segment grid needs m >= 2, got {m}")));
    }
    let users = UserSpace::unit_interval(m)?;
    let locations = users.users().iter().map(|u| u.point.clone()).collect();
    Game::symmetric(users, players, locations, SimilarityModel::SegmentKernel)
}

/// Index of the segment grid point closest to `x`.
pub fn segment_grid_index(m: usize, x: f64) -> usize {
    let k = (x * m as f64 - 0.5).round();
    k.clamp(0.0, (m - 1) as f64) as usize
}

/// `∫_a^b (1 - |u - x|) du`
fn kernel_integral(a: f64, b: f64, x: f64) -> f64 {
    // antiderivative of |u - x| is sign(u - x) (u - x)^2 / 2
    let g = |u: f64| {
        let d = u - x;
        d * d.abs() / 2.0
    };
    (b - a) - (g(b) - g(a))
}

fn check_unit(x: f64, name: &str) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Config(format!("{name} = {x} outside [0, 1]")))
    }
}

/// Exact payoffs of the continuous segment game for `x1 <= x2`.
///
/// Users left of the midpoint `(x1 + x2) / 2` give player 1 the
/// probability `σ(u, x1) - σ(u, x2)/2` and player 2 `σ(u, x2)/2`; users
/// right of it are mirrored.
pub fn segment_payoff_closed(x1: f64, x2: f64) -> Result<(f64, f64)> {
    check_unit(x1, "x1")?;
    check_unit(x2, "x2")?;
    if x1 > x2 {
        return Err(Error::Config(format!(
            "closed-form payoffs need x1 <= x2, got ({x1}, {x2})"
        )));
    }
    let mid = (x1 + x2) / 2.0;
    let p1 = kernel_integral(0.0, mid, x1) - kernel_integral(0.0, mid, x2) / 2.0 + kernel_integral(mid, 1.0, x1) / 2.0;
    let p2 = kernel_integral(mid, 1.0, x2) - kernel_integral(mid, 1.0, x1) / 2.0 + kernel_integral(0.0, mid, x2) / 2.0;
    Ok((p1, p2))
}

/// Potential of the continuous segment game,
/// `x2 + x1/2 - 7/8 (x1² + x2²) + x1 x2 / 4 + 3/4` for `x1 <= x2`.
/// Unordered inputs are swapped; values outside `[0, 1]` are clamped.
pub fn segment_potential_closed(x1: f64, x2: f64) -> f64 {
    let (a, b) = {
        let a = x1.clamp(0.0, 1.0);
        let b = x2.clamp(0.0, 1.0);
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    };
    b + a / 2.0 - 7.0 / 8.0 * (a * a + b * b) + a * b / 4.0 + 3.0 / 4.0
}

/// Gradient of the segment potential polynomial on `x1 <= x2`.
pub fn segment_potential_gradient(x1: f64, x2: f64) -> (f64, f64) {
    (0.5 - 7.0 / 4.0 * x1 + x2 / 4.0, 1.0 - 7.0 / 4.0 * x2 + x1 / 4.0)
}

/// `n` unit-mass users at the basis vectors `e_1..e_n` (weight `1/n` each)
/// and candidate set `{0, e_1, ..., e_n}`. A facility at `e_k` fully
/// satisfies the user at `e_k` and nobody else; a facility at the origin
/// gives every user `n / (2n - 1)`.
///
/// The all-origin profile is an equilibrium with welfare `n / (2n - 1)`,
/// while spreading out over the basis vectors reaches welfare 1.
pub fn poa_tight_instance(n: usize) -> Result<Game> {
    if n < 2 {
        return Err(Error::Config(format!("tight instance needs n >= 2, got {n}")));
    }
    let basis = |k: usize| -> Point { (0..n).map(|j| if j == k { 1.0 } else { 0.0 }).collect() };
    let users = UserSpace::uniform((0..n).map(basis).collect())?;
    let mut locations = vec![vec![0.0; n]];
    locations.extend((0..n).map(basis));
    let origin = n as f64 / (2 * n - 1) as f64;
    let table = (0..n)
        .map(|user| {
            std::iter::once(origin)
                .chain((0..n).map(|k| if k == user { 1.0 } else { 0.0 }))
                .collect()
        })
        .collect();
    Game::symmetric(users, n, locations, SimilarityModel::Table(table))
}

/// Equal-weight users at `points`; player `i` attracts exactly the users
/// within distance `radii[i]` of her facility. A single location set is
/// shared by all players.
pub fn limited_attraction_instance(points: Vec<Point>, radii: &[f64], location_sets: Vec<Vec<Point>>) -> Result<Game> {
    if let Some(r) = radii.iter().find(|r| !(**r >= 0.0)) {
        return Err(Error::Config(format!("attraction radius {r} must be >= 0")));
    }
    let users = UserSpace::uniform(points)?;
    let sets = match location_sets.len() {
        1 => vec![location_sets[0].clone(); radii.len()],
        n if n == radii.len() => location_sets,
        n => return Err(Error::Config(format!("{} radii but {n} location sets", radii.len()))),
    };
    let models = radii
        .iter()
        .map(|&radius| SimilarityModel::LimitedAttraction { radius })
        .collect();
    Game::asymmetric(users, sets, models)
}
