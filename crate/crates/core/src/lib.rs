//! Solver toolkit for Shapley facility location games.
//!
//! Users are a finite weighted point set, each player places one facility
//! from her candidate set, and every user picks a facility through a
//! satisfaction-threshold lottery whose probabilities coincide with the
//! Shapley value of a max-similarity cooperative game.
//!
//! * [`game`]: users, candidate locations, similarity models, JSON configs
//! * [`attraction`]: per-user attraction probabilities and a choice sampler
//! * [`values`]: payoffs, the exact potential and social welfare
//! * [`coop`]: coalition values, brute-force Shapley values, set-function checks
//! * [`dynamics`]: ε-best-response dynamics and their iteration bound
//! * [`equilibria`]: equilibrium checks, enumeration and Price of Anarchy
//! * [`scenarios`]: the segment game, the tight PoA instance, limited attraction
//! * [`cli`]: the `sfl` command-line front end
//!
//! ```
//! use shapley_facility::prelude::*;
//!
//! let game = segment_game(40).unwrap();
//! let x = StrategyProfile::new(vec![14, 25]);
//! let v = evaluate(&game, &x).unwrap();
//! assert!((v.payoffs.iter().sum::<f64>() - v.welfare).abs() < 1e-12);
//! ```

// `!(x >= 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod attraction;
pub mod cli;
pub mod coop;
pub mod dynamics;
pub mod equilibria;
pub mod error;
pub mod game;
pub mod scenarios;
pub mod values;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::attraction::{coverage_count, shapley_attraction, simulate_choice, AttractionResult};
    pub use crate::coop::{
        characteristic, check_submodular, marginal_payoff_bound, shapley_value, shapley_values, Coalition, Facility,
    };
    pub use crate::dynamics::{
        best_response, has_profitable_deviation, iteration_bound, run_dynamics, DynamicsConfig, DynamicsTrace,
        MoverRule,
    };
    pub use crate::equilibria::{enumerate_pne, is_epsilon_pne, price_of_anarchy, PoAReport};
    pub use crate::error::{Error, Result};
    pub use crate::game::{
        build_game, similarity, Game, GameConfig, Kernel, Point, SimilarityModel, StrategyProfile, User, UserSpace,
    };
    pub use crate::scenarios::{
        limited_attraction_instance, poa_tight_instance, segment_game, segment_payoff_closed, segment_potential_closed,
    };
    pub use crate::values::{evaluate, harmonic, payoff, payoffs, potential, social_welfare, ValueVector};
}
