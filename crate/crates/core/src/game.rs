//! Game representation: weighted users, per-player candidate locations and
//! similarity models, with similarity matrices precomputed at build time.
//!
//! Continuous user densities are represented by finite weighted point sets.
//! Every player owns a finite list of candidate locations; a symmetric game
//! shares one list and one similarity model across all players.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point in user/location space.
pub type Point = Vec<f64>;

/// Users' weights must sum to one within this tolerance.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct User {
    pub point: Point,
    pub weight: f64,
}

/// Finite weighted user population (a discretized density).
#[derive(Debug, Clone, PartialEq)]
pub struct UserSpace {
    users: Vec<User>,
    dimension: usize,
}

impl UserSpace {
    pub fn new(users: Vec<User>) -> Result<Self> {
        let first = users.first().ok_or(Error::NoUsers)?;
        let dimension = first.point.len();
        if dimension == 0 {
            return Err(Error::DimensionMismatch {
                entity: "user 0".into(),
                expected: 1,
                found: 0,
            });
        }
        let mut sum = 0.0;
        for (i, user) in users.iter().enumerate() {
            if user.point.len() != dimension {
                return Err(Error::DimensionMismatch {
                    entity: format!("user {i}"),
                    expected: dimension,
                    found: user.point.len(),
                });
            }
            if !(user.weight > 0.0 && user.weight <= 1.0) {
                return Err(Error::InvalidWeight {
                    user: i,
                    weight: user.weight,
                });
            }
            sum += user.weight;
        }
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::WeightSum {
                sum,
                tolerance: WEIGHT_SUM_TOLERANCE,
            });
        }
        Ok(Self { users, dimension })
    }

    /// Equal weights `1/len` on the given points.
    pub fn uniform(points: Vec<Point>) -> Result<Self> {
        let weight = 1.0 / points.len().max(1) as f64;
        Self::new(points.into_iter().map(|point| User { point, weight }).collect())
    }

    /// Midpoint-rule discretization of the uniform density on `[0, 1]`.
    pub fn unit_interval(m: usize) -> Result<Self> {
        let h = 1.0 / m as f64;
        Self::uniform((0..m).map(|k| vec![(k as f64 + 0.5) * h]).collect())
    }

    pub fn len(&self) -> usize {
        self.users.len()
    }

    pub fn is_empty(&self) -> bool {
        self.users.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn users(&self) -> &[User] {
        &self.users
    }

    pub fn weight(&self, user: usize) -> f64 {
        self.users[user].weight
    }

    pub fn point(&self, user: usize) -> &[f64] {
        &self.users[user].point
    }
}

type KernelFn = dyn Fn(&[f64], &[f64]) -> f64 + Send + Sync;

/// User-supplied similarity kernel `(user point, location point) -> [0, 1]`.
#[derive(Clone)]
pub struct Kernel {
    name: String,
    f: Arc<KernelFn>,
}

impl Kernel {
    pub fn new(name: impl Into<String>, f: impl Fn(&[f64], &[f64]) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, user: &[f64], location: &[f64]) -> f64 {
        (self.f)(user, location)
    }
}

impl fmt::Debug for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Kernel").field(&self.name).finish()
    }
}

impl PartialEq for Kernel {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.f, &other.f)
    }
}

/// How a player's facility is valued by each user.
#[derive(Debug, Clone, PartialEq)]
pub enum SimilarityModel {
    /// `1 - d(u, t)` with Euclidean distance `d`.
    SegmentKernel,
    /// Indicator of `d(u, t) <= radius`.
    LimitedAttraction {
        radius: f64,
    },
    /// Explicit matrix indexed `[user][location]`.
    Table(Vec<Vec<f64>>),
    Custom(Kernel),
}

impl SimilarityModel {
    pub fn evaluate(&self, user: usize, user_point: &[f64], location: usize, location_point: &[f64]) -> f64 {
        match self {
            SimilarityModel::SegmentKernel => 1.0 - distance(user_point, location_point),
            SimilarityModel::LimitedAttraction { radius } => {
                if distance(user_point, location_point) <= *radius {
                    1.0
                } else {
                    0.0
                }
            }
            SimilarityModel::Table(rows) => rows[user][location],
            SimilarityModel::Custom(kernel) => kernel.eval(user_point, location_point),
        }
    }
}

pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() == 1 {
        return (a[0] - b[0]).abs();
    }
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Precomputed `users x locations` similarity values for one player.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityMatrix {
    n_locations: usize,
    values: Vec<f64>,
}

impl SimilarityMatrix {
    #[inline]
    pub fn get(&self, user: usize, location: usize) -> f64 {
        self.values[user * self.n_locations + location]
    }

    /// Similarities of every candidate location for one user.
    pub fn row(&self, user: usize) -> &[f64] {
        &self.values[user * self.n_locations..(user + 1) * self.n_locations]
    }

    pub fn n_locations(&self) -> usize {
        self.n_locations
    }
}

/// A Shapley facility location game over finite candidate sets.
#[derive(Debug, Clone)]
pub struct Game {
    users: UserSpace,
    location_sets: Vec<Arc<Vec<Point>>>,
    models: Vec<SimilarityModel>,
    matrices: Vec<Arc<SimilarityMatrix>>,
    symmetric: bool,
}

impl Game {
    /// All players share `locations` and `model`.
    pub fn symmetric(
        users: UserSpace,
        n_players: usize,
        locations: Vec<Point>,
        model: SimilarityModel,
    ) -> Result<Self> {
        if n_players == 0 {
            return Err(Error::Config("game needs at least one player".into()));
        }
        if locations.is_empty() {
            return Err(Error::EmptyLocationSet { player: 0 });
        }
        check_location_dims(&users, 0, &locations)?;
        let matrix = Arc::new(build_matrix(&users, 0, &locations, &model)?);
        let locations = Arc::new(locations);
        Ok(Self {
            users,
            location_sets: vec![locations; n_players],
            models: vec![model; n_players],
            matrices: vec![matrix; n_players],
            symmetric: true,
        })
    }

    /// Each player has her own candidate set and similarity model.
    pub fn asymmetric(users: UserSpace, location_sets: Vec<Vec<Point>>, models: Vec<SimilarityModel>) -> Result<Self> {
        if location_sets.is_empty() {
            return Err(Error::Config("game needs at least one player".into()));
        }
        if location_sets.len() != models.len() {
            return Err(Error::Config(format!(
                "{} location sets but {} similarity models",
                location_sets.len(),
                models.len()
            )));
        }
        let mut matrices = Vec::with_capacity(models.len());
        for (player, (locations, model)) in location_sets.iter().zip(&models).enumerate() {
            if locations.is_empty() {
                return Err(Error::EmptyLocationSet { player });
            }
            check_location_dims(&users, player, locations)?;
            matrices.push(Arc::new(build_matrix(&users, player, locations, model)?));
        }
        let symmetric = location_sets.windows(2).all(|w| w[0] == w[1]) && models.windows(2).all(|w| w[0] == w[1]);
        Ok(Self {
            users,
            location_sets: location_sets.into_iter().map(Arc::new).collect(),
            models,
            matrices,
            symmetric,
        })
    }

    pub fn users(&self) -> &UserSpace {
        &self.users
    }

    pub fn n_users(&self) -> usize {
        self.users.len()
    }

    pub fn n_players(&self) -> usize {
        self.location_sets.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn locations(&self, player: usize) -> &[Point] {
        &self.location_sets[player]
    }

    pub fn n_locations(&self, player: usize) -> usize {
        self.location_sets[player].len()
    }

    pub fn model(&self, player: usize) -> &SimilarityModel {
        &self.models[player]
    }

    pub fn matrix(&self, player: usize) -> &SimilarityMatrix {
        &self.matrices[player]
    }

    /// Unchecked lookup of `S_player(user, location)`.
    #[inline]
    pub fn sim(&self, player: usize, user: usize, location: usize) -> f64 {
        self.matrices[player].get(user, location)
    }

    /// Number of pure profiles, `prod_i |L_i|` (saturating).
    pub fn profile_count(&self) -> u128 {
        self.location_sets
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.len() as u128))
    }

    /// Fills `out` with `(S_i(user, x_i))_i` for the given profile.
    pub fn profile_similarities(&self, profile: &StrategyProfile, user: usize, out: &mut Vec<f64>) {
        out.clear();
        out.extend(
            profile
                .choices()
                .iter()
                .enumerate()
                .map(|(player, &loc)| self.sim(player, user, loc)),
        );
    }

    /// Checks that `profile` has one in-range choice per player.
    pub fn check_profile(&self, profile: &StrategyProfile) -> Result<()> {
        if profile.len() != self.n_players() {
            return Err(Error::Config(format!(
                "profile has {} entries, game has {} players",
                profile.len(),
                self.n_players()
            )));
        }
        for (player, &loc) in profile.choices().iter().enumerate() {
            self.check_location(player, loc)?;
        }
        Ok(())
    }

    pub fn check_player(&self, player: usize) -> Result<()> {
        if player >= self.n_players() {
            return Err(Error::IndexOutOfRange {
                kind: "player",
                index: player,
                len: self.n_players(),
            });
        }
        Ok(())
    }

    pub fn check_location(&self, player: usize, location: usize) -> Result<()> {
        self.check_player(player)?;
        if location >= self.n_locations(player) {
            return Err(Error::IndexOutOfRange {
                kind: "location",
                index: location,
                len: self.n_locations(player),
            });
        }
        Ok(())
    }

    /// Serializable description of this game. Custom kernels are exported
    /// as explicit tables.
    pub fn to_config(&self) -> GameConfig {
        let users = self.users.users().to_vec();
        let players = self.n_players();
        let location_sets = if self.symmetric {
            LocationSets::Shared {
                shared: self.location_sets[0].to_vec(),
            }
        } else {
            LocationSets::PerPlayer(self.location_sets.iter().map(|l| l.to_vec()).collect())
        };
        let table = |player: usize| -> Vec<Vec<f64>> {
            (0..self.n_users())
                .map(|u| self.matrices[player].row(u).to_vec())
                .collect()
        };
        let similarity = if self.symmetric {
            match &self.models[0] {
                SimilarityModel::SegmentKernel => SimilarityConfig::SegmentKernel,
                SimilarityModel::LimitedAttraction { radius } => {
                    SimilarityConfig::LimitedAttraction { radii: vec![*radius] }
                }
                _ => SimilarityConfig::Table { tables: vec![table(0)] },
            }
        } else if self.models.iter().all(|m| matches!(m, SimilarityModel::SegmentKernel)) {
            SimilarityConfig::SegmentKernel
        } else if self
            .models
            .iter()
            .all(|m| matches!(m, SimilarityModel::LimitedAttraction { .. }))
        {
            SimilarityConfig::LimitedAttraction {
                radii: self
                    .models
                    .iter()
                    .map(|m| match m {
                        SimilarityModel::LimitedAttraction { radius } => *radius,
                        _ => unreachable!(),
                    })
                    .collect(),
            }
        } else {
            SimilarityConfig::Table {
                tables: (0..players).map(table).collect(),
            }
        };
        GameConfig {
            users,
            players,
            location_sets,
            similarity,
        }
    }
}

fn check_location_dims(users: &UserSpace, player: usize, locations: &[Point]) -> Result<()> {
    for (l, point) in locations.iter().enumerate() {
        if point.len() != users.dimension() {
            return Err(Error::DimensionMismatch {
                entity: format!("location {l} of player {player}"),
                expected: users.dimension(),
                found: point.len(),
            });
        }
    }
    Ok(())
}

fn build_matrix(
    users: &UserSpace,
    player: usize,
    locations: &[Point],
    model: &SimilarityModel,
) -> Result<SimilarityMatrix> {
    match model {
        SimilarityModel::Table(rows) => {
            if rows.len() != users.len() {
                return Err(Error::Config(format!(
                    "similarity table of player {player} has {} rows, expected {} users",
                    rows.len(),
                    users.len()
                )));
            }
            if let Some((u, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != locations.len()) {
                return Err(Error::Config(format!(
                    "similarity table of player {player}, row {u} has {} columns, expected {} locations",
                    row.len(),
                    locations.len()
                )));
            }
        }
        SimilarityModel::LimitedAttraction { radius } if !(*radius >= 0.0) => {
            return Err(Error::Config(format!(
                "player {player} has attraction radius {radius}, expected >= 0"
            )));
        }
        _ => {}
    }
    let mut values = Vec::with_capacity(users.len() * locations.len());
    for u in 0..users.len() {
        for (l, point) in locations.iter().enumerate() {
            let value = model.evaluate(u, users.point(u), l, point);
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::SimilarityOutOfRange {
                    player,
                    user: u,
                    location: l,
                    value,
                });
            }
            values.push(value);
        }
    }
    Ok(SimilarityMatrix {
        n_locations: locations.len(),
        values,
    })
}

/// Checked similarity lookup `S_player(user, location)`.
pub fn similarity(game: &Game, player: usize, user: usize, location: usize) -> Result<f64> {
    game.check_location(player, location)?;
    if user >= game.n_users() {
        return Err(Error::IndexOutOfRange {
            kind: "user",
            index: user,
            len: game.n_users(),
        });
    }
    Ok(game.sim(player, user, location))
}

/// One location index per player.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrategyProfile(Vec<usize>);

impl StrategyProfile {
    pub fn new(choices: Vec<usize>) -> Self {
        Self(choices)
    }

    pub fn choices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, player: usize) -> usize {
        self.0[player]
    }

    pub fn set(&mut self, player: usize, location: usize) {
        self.0[player] = location;
    }

    /// Copy of this profile with `player` moved to `location`.
    pub fn with_move(&self, player: usize, location: usize) -> Self {
        let mut next = self.clone();
        next.0[player] = location;
        next
    }
}

impl From<Vec<usize>> for StrategyProfile {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

impl fmt::Display for StrategyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------
// JSON game description

/// JSON game description.
///
/// ```json
/// {
///   "users": [{"point": [0.25], "weight": 0.5}, {"point": [0.75], "weight": 0.5}],
///   "players": 2,
///   "location_sets": {"shared": [[0.25], [0.75]]},
///   "similarity": {"kind": "segment-kernel"}
/// }
/// ```
///
/// `location_sets` is either `{"shared": [...]}` or an array with one list
/// of points per player. `similarity.kind` is one of `segment-kernel`,
/// `limited-attraction` (`params.radii`: one radius, or one per player) or
/// `table` (`params.tables`: one `users x locations` matrix, or one per
/// player).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameConfig {
    pub users: Vec<User>,
    pub players: usize,
    pub location_sets: LocationSets,
    pub similarity: SimilarityConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LocationSets {
    Shared { shared: Vec<Point> },
    PerPlayer(Vec<Vec<Point>>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "kebab-case")]
pub enum SimilarityConfig {
    SegmentKernel,
    LimitedAttraction { radii: Vec<f64> },
    Table { tables: Vec<Vec<Vec<f64>>> },
}

impl GameConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid game config: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("game config serializes")
    }
}

fn per_player<T: Clone>(items: &[T], players: usize, what: &str) -> Result<Vec<T>> {
    match items.len() {
        1 => Ok(vec![items[0].clone(); players]),
        n if n == players => Ok(items.to_vec()),
        n => Err(Error::Config(format!(
            "{what}: expected 1 or {players} entries, found {n}"
        ))),
    }
}

/// Validates a game description and precomputes its similarity matrices.
pub fn build_game(config: &GameConfig) -> Result<Game> {
    let users = UserSpace::new(config.users.clone())?;
    let n = config.players;
    if n == 0 {
        return Err(Error::Config("game needs at least one player".into()));
    }
    let models: Vec<SimilarityModel> = match &config.similarity {
        SimilarityConfig::SegmentKernel => vec![SimilarityModel::SegmentKernel; n],
        SimilarityConfig::LimitedAttraction { radii } => per_player(radii, n, "radii")?
            .into_iter()
            .map(|radius| SimilarityModel::LimitedAttraction { radius })
            .collect(),
        SimilarityConfig::Table { tables } => per_player(tables, n, "tables")?
            .into_iter()
            .map(SimilarityModel::Table)
            .collect(),
    };
    let shared_model = models.windows(2).all(|w| w[0] == w[1]);
    match &config.location_sets {
        LocationSets::Shared { shared } if shared_model => {
            Game::symmetric(users, n, shared.clone(), models.into_iter().next().unwrap())
        }
        LocationSets::Shared { shared } => Game::asymmetric(users, vec![shared.clone(); n], models),
        LocationSets::PerPlayer(sets) => {
            if sets.len() != n {
                return Err(Error::Config(format!(
                    "location_sets: expected {n} per-player sets, found {}",
                    sets.len()
                )));
            }
            Game::asymmetric(users, sets.clone(), models)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn segment(m: usize) -> GameConfig {
        let users = UserSpace::unit_interval(m).unwrap();
        GameConfig {
            users: users.users().to_vec(),
            players: 2,
            location_sets: LocationSets::Shared {
                shared: users.users().iter().map(|u| u.point.clone()).collect(),
            },
            similarity: SimilarityConfig::SegmentKernel,
        }
    }

    #[test]
    fn segment_config_builds_uniform_users() {
        let game = build_game(&segment(4)).unwrap();
        assert_eq!(game.n_users(), 4);
        assert!(game.users().users().iter().all(|u| u.weight == 0.25));
        assert!(game.is_symmetric());
    }

    #[test]
    fn weight_sum_violation() {
        let mut cfg = segment(4);
        cfg.users[0].weight = 0.15;
        assert!(matches!(build_game(&cfg), Err(Error::WeightSum { .. })));
    }

    #[test]
    fn out_of_range_similarity_names_entity() {
        let users = UserSpace::uniform(vec![vec![0.0], vec![3.0]]).unwrap();
        let err = Game::symmetric(users, 2, vec![vec![0.0]], SimilarityModel::SegmentKernel).unwrap_err();
        assert_eq!(
            err,
            Error::SimilarityOutOfRange {
                player: 0,
                user: 1,
                location: 0,
                value: -2.0
            }
        );
    }

    #[test]
    fn empty_location_set_and_dimension_mismatch() {
        let mut cfg = segment(2);
        cfg.location_sets = LocationSets::PerPlayer(vec![vec![vec![0.5]], vec![]]);
        assert_eq!(build_game(&cfg).unwrap_err(), Error::EmptyLocationSet { player: 1 });

        let mut cfg = segment(2);
        cfg.location_sets = LocationSets::Shared {
            shared: vec![vec![0.5, 0.5]],
        };
        assert!(matches!(build_game(&cfg), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn table_shape_checked() {
        let mut cfg = segment(2);
        cfg.similarity = SimilarityConfig::Table {
            tables: vec![vec![vec![0.5, 0.5]]],
        };
        assert!(matches!(build_game(&cfg), Err(Error::Config(_))));
    }

    #[test]
    fn similarity_lookup() {
        let users = UserSpace::uniform(vec![vec![0.2], vec![0.7]]).unwrap();
        let game = Game::symmetric(users, 2, vec![vec![0.7], vec![0.2]], SimilarityModel::SegmentKernel).unwrap();
        assert!((similarity(&game, 0, 0, 0).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(similarity(&game, 1, 1, 0).unwrap(), 1.0);
        assert!(matches!(
            similarity(&game, 2, 0, 0),
            Err(Error::IndexOutOfRange { kind: "player", .. })
        ));
        assert!(matches!(
            similarity(&game, 0, 0, 5),
            Err(Error::IndexOutOfRange { kind: "location", .. })
        ));
    }

    #[test]
    fn limited_attraction_outside_radius_is_zero() {
        let users = UserSpace::uniform(vec![vec![0.0], vec![1.0]]).unwrap();
        let game = Game::asymmetric(
            users,
            vec![vec![vec![0.0]], vec![vec![0.0]]],
            vec![
                SimilarityModel::LimitedAttraction { radius: 0.5 },
                SimilarityModel::LimitedAttraction { radius: 2.0 },
            ],
        )
        .unwrap();
        assert_eq!(game.sim(0, 1, 0), 0.0);
        assert_eq!(game.sim(1, 1, 0), 1.0);
        assert!(!game.is_symmetric());
    }

    #[test]
    fn symmetric_matrices_are_shared() {
        let game = build_game(&segment(8)).unwrap();
        assert!(Arc::ptr_eq(&game.matrices[0], &game.matrices[1]));
    }

    #[test]
    fn config_json_round_trip() {
        let cfg = segment(3);
        let text = cfg.to_json();
        assert!(text.contains("\"kind\": \"segment-kernel\""));
        let back = GameConfig::from_json(&text).unwrap();
        assert_eq!(back, cfg);
        let game = build_game(&back).unwrap();
        assert_eq!(game.to_config(), cfg);
    }

    #[test]
    fn parses_hand_written_config() {
        let text = r#"{
            "users": [{"point": [0.0], "weight": 0.5}, {"point": [1.0], "weight": 0.5}],
            "players": 2,
            "location_sets": [[[0.0], [1.0]], [[0.5]]],
            "similarity": {"kind": "limited-attraction", "params": {"radii": [0.1, 0.6]}}
        }"#;
        let game = build_game(&GameConfig::from_json(text).unwrap()).unwrap();
        assert_eq!(game.n_locations(0), 2);
        assert_eq!(game.n_locations(1), 1);
        assert_eq!(game.sim(1, 0, 0), 1.0);
        assert_eq!(game.sim(0, 0, 1), 0.0);
    }

    #[test]
    fn custom_kernel_exports_as_table() {
        let users = UserSpace::uniform(vec![vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        let kernel = Kernel::new("gauss", |u, t| (-distance(u, t).powi(2)).exp());
        let game = Game::symmetric(
            users,
            2,
            vec![vec![0.0, 0.0], vec![1.0, 1.0]],
            SimilarityModel::Custom(kernel),
        )
        .unwrap();
        let back = build_game(&game.to_config()).unwrap();
        for u in 0..2 {
            for l in 0..2 {
                assert_eq!(back.sim(1, u, l), game.sim(1, u, l));
            }
        }
    }
}
