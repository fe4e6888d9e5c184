#![allow(dead_code)]

use rand::Rng;
use shapley_facility::prelude::*;

pub struct Shape {
    pub max_players: usize,
    pub max_users: usize,
    pub max_locations: usize,
}

fn random_similarity<R: Rng>(rng: &mut R, coarse: bool) -> f64 {
    if coarse {
        // coarse values produce frequent ties
        rng.gen_range(0..=4) as f64 / 4.0
    } else {
        rng.gen::<f64>()
    }
}

fn random_users<R: Rng>(rng: &mut R, count: usize, dim: usize) -> UserSpace {
    let raw: Vec<f64> = (0..count).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    let users = raw
        .iter()
        .map(|w| User {
            point: (0..dim).map(|_| rng.gen::<f64>()).collect(),
            weight: w / total,
        })
        .collect();
    UserSpace::new(users).expect("normalized weights")
}

/// Random table game; symmetric with probability 1/2.
pub fn random_table_game<R: Rng>(rng: &mut R, shape: &Shape, symmetric: Option<bool>) -> Game {
    let n = rng.gen_range(1..=shape.max_players);
    let n_users = rng.gen_range(1..=shape.max_users);
    let users = random_users(rng, n_users, 1);
    let coarse = rng.gen_bool(0.3);
    let table = |rng: &mut R, locs: usize| -> Vec<Vec<f64>> {
        (0..n_users)
            .map(|_| (0..locs).map(|_| random_similarity(rng, coarse)).collect())
            .collect()
    };
    let symmetric = symmetric.unwrap_or_else(|| rng.gen_bool(0.5));
    if symmetric {
        let locs = rng.gen_range(1..=shape.max_locations);
        let t = table(rng, locs);
        Game::symmetric(
            users,
            n,
            (0..locs).map(|l| vec![l as f64]).collect(),
            SimilarityModel::Table(t),
        )
        .unwrap()
    } else {
        let mut sets = Vec::new();
        let mut models = Vec::new();
        for _ in 0..n {
            let locs = rng.gen_range(1..=shape.max_locations);
            sets.push((0..locs).map(|l| vec![l as f64]).collect());
            models.push(SimilarityModel::Table(table(rng, locs)));
        }
        Game::asymmetric(users, sets, models).unwrap()
    }
}

/// Random users and locations in the unit square with `1 - d/√2` similarity.
pub fn random_geometric_game<R: Rng>(rng: &mut R, shape: &Shape) -> Game {
    let n = rng.gen_range(1..=shape.max_players);
    let count = rng.gen_range(1..=shape.max_users);
    let users = random_users(rng, count, 2);
    let locs = rng.gen_range(1..=shape.max_locations);
    let points = (0..locs).map(|_| vec![rng.gen::<f64>(), rng.gen::<f64>()]).collect();
    let kernel = Kernel::new("linear", |u, t| {
        let d = ((u[0] - t[0]).powi(2) + (u[1] - t[1]).powi(2)).sqrt();
        (1.0 - d / 2f64.sqrt()).max(0.0)
    });
    Game::symmetric(users, n, points, SimilarityModel::Custom(kernel)).unwrap()
}

pub fn random_game<R: Rng>(rng: &mut R, shape: &Shape) -> Game {
    if rng.gen_bool(0.25) {
        random_geometric_game(rng, shape)
    } else {
        random_table_game(rng, shape, None)
    }
}

pub fn random_profile<R: Rng>(rng: &mut R, game: &Game) -> StrategyProfile {
    StrategyProfile::new(
        (0..game.n_players())
            .map(|i| rng.gen_range(0..game.n_locations(i)))
            .collect(),
    )
}
