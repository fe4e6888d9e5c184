//! Command-line front end shared by the `sfl` binary and the tests.
//!
//! Games are read from `--game <path>` or, when absent, from standard
//! input, so scenario generators can be piped into the analyses:
//!
//! ```text
//! sfl scenario segment --m 200 | sfl dynamics --epsilon 0.01 --seed 0
//! sfl scenario poa-tight --n 3 | sfl poa
//! ```
//!
//! Exit codes: 0 success, 2 configuration error, 3 capacity error,
//! 4 non-convergence, 1 anything else.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::attraction::{shapley_attraction, simulate_choice};
use crate::coop::shapley_values;
use crate::dynamics::{run_dynamics, DynamicsConfig, MoverRule};
use crate::equilibria::{enumerate_pne_with_cap, equilibria_csv, price_of_anarchy_with_cap, DEFAULT_PROFILE_CAP};
use crate::error::{Error, Result};
use crate::game::{build_game, Game, GameConfig, StrategyProfile};
use crate::scenarios::{limited_attraction_instance, poa_tight_instance, segment_game_with_players};
use crate::values::{evaluate, Evaluator};

#[derive(Debug, Parser)]
#[command(name = "sfl", version, about = "Shapley facility location game solver")]
struct Cli {
    /// Game description (JSON); read from stdin when omitted
    #[arg(long, global = true)]
    game: Option<PathBuf>,
    #[arg(long, global = true)]
    epsilon: Option<f64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long = "max-iters", global = true)]
    max_iters: Option<usize>,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mover {
    LowestIndex,
    RoundRobin,
    Random,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Attraction probabilities of one user
    Attract {
        /// Comma-separated similarities, one per player
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        sims: Vec<f64>,
        /// Also sample this many threshold draws
        #[arg(long)]
        samples: Option<u64>,
    },
    /// Payoffs, potential and welfare of a profile
    Values {
        #[arg(long, value_delimiter = ',')]
        profile: Vec<usize>,
    },
    /// Best-response dynamics trace
    Dynamics {
        /// Start profile; random (from --seed) when omitted
        #[arg(long, value_delimiter = ',')]
        profile: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Mover::LowestIndex)]
        mover: Mover,
    },
    /// All (ε-)equilibria of the finite game
    Equilibria {
        #[arg(long, default_value_t = DEFAULT_PROFILE_CAP)]
        cap: u128,
    },
    /// Price of Anarchy report
    Poa {
        #[arg(long, default_value_t = DEFAULT_PROFILE_CAP)]
        cap: u128,
    },
    /// Compare payoffs with brute-force Shapley values
    ShapleyCheck {
        /// Check only this profile
        #[arg(long, value_delimiter = ',')]
        profile: Option<Vec<usize>>,
        /// Random profiles to check when no profile is given
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Emit a built-in game as JSON
    Scenario {
        #[command(subcommand)]
        which: Scenario,
    },
}

#[derive(Debug, Subcommand)]
enum Scenario {
    /// Uniform users on [0, 1] with similarity 1 - |u - t|
    Segment {
        #[arg(long, default_value_t = 200)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        players: usize,
    },
    /// Instance whose Price of Anarchy equals (2n - 1)/n
    PoaTight {
        #[arg(long)]
        n: usize,
    },
    /// Indicator similarities within per-player radii (1-D points)
    LimitedAttraction {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        points: Vec<f64>,
        #[arg(long, value_delimiter = ',')]
        radii: Vec<f64>,
    },
}

/// Shapley values and payoffs must agree within this tolerance.
pub const SHAPLEY_CHECK_TOLERANCE: f64 = 1e-9;

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run_cli<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli, stdin) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.text, stdout) {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            match outcome.failure {
                Some(err) => {
                    let _ = writeln!(stderr, "error: {err}");
                    err.exit_code()
                }
                None => 0,
            }
        }
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            err.exit_code()
        }
    }
}

struct Outcome {
    text: String,
    /// Reported after the output is written.
    failure: Option<Error>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, failure: None }
    }
}

fn emit(cli: &Cli, text: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn load_game(cli: &Cli, stdin: &mut dyn Read) -> Result<Game> {
    let text = match &cli.game {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read game config {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Config(format!("cannot read game config from stdin: {e}")))?;
            s
        }
    };
    build_game(&GameConfig::from_json(&text)?)
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format], command: &str) -> Result<Format> {
    let f = cli.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Error::Config(format!("format {f:?} is not supported by `{command}`")))
    }
}

fn random_profile(game: &Game, rng: &mut ChaCha8Rng) -> StrategyProfile {
    StrategyProfile::new(
        (0..game.n_players())
            .map(|i| rng.gen_range(0..game.n_locations(i)))
            .collect(),
    )
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    match &cli.command {
        Command::Attract { sims, samples } => {
            format_or(cli, Format::Json, &[Format::Json], "attract")?;
            let r = shapley_attraction(sims)?;
            let mut value = json!({ "probabilities": r.probabilities, "none": r.none_probability });
            if let Some(trials) = samples {
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                let mut counts = vec![0u64; sims.len() + 1];
                for _ in 0..*trials {
                    match simulate_choice(sims, &mut rng)? {
                        Some(i) => counts[i] += 1,
                        None => counts[sims.len()] += 1,
                    }
                }
                let freq: Vec<f64> = counts.iter().map(|&c| c as f64 / *trials as f64).collect();
                value["samples"] = json!(trials);
                value["empirical"] = json!(&freq[..sims.len()]);
                value["empirical_none"] = json!(freq[sims.len()]);
            }
            Ok(Outcome::ok(to_json(&value)))
        }
        Command::Values { profile } => {
            format_or(cli, Format::Json, &[Format::Json], "values")?;
            let game = load_game(cli, stdin)?;
            let x = StrategyProfile::new(profile.clone());
            let v = evaluate(&game, &x)?;
            Ok(Outcome::ok(to_json(&json!({
                "profile": x,
                "payoffs": v.payoffs,
                "potential": v.potential,
                "welfare": v.welfare,
            }))))
        }
        Command::Dynamics { profile, mover } => {
            let format = format_or(
                cli,
                Format::Jsonl,
                &[Format::Jsonl, Format::Json, Format::Csv],
                "dynamics",
            )?;
            let game = load_game(cli, stdin)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let start = match profile {
                Some(p) => StrategyProfile::new(p.clone()),
                None => random_profile(&game, &mut rng),
            };
            let config = DynamicsConfig {
                epsilon: cli.epsilon.unwrap_or(0.01),
                max_iters: cli.max_iters,
                mover_rule: match mover {
                    Mover::LowestIndex => MoverRule::LowestIndex,
                    Mover::RoundRobin => MoverRule::RoundRobin,
                    Mover::Random => MoverRule::SeededRandom(cli.seed),
                },
            };
            let trace = run_dynamics(&game, &start, &config)?;
            let text = match format {
                Format::Jsonl => trace.to_jsonl(&game),
                Format::Json => to_json(&trace),
                Format::Csv => trace.to_csv(),
            };
            Ok(Outcome {
                text,
                failure: (!trace.converged).then_some(Error::NonConvergence {
                    max_iters: trace.max_iters,
                }),
            })
        }
        Command::Equilibria { cap } => {
            let format = format_or(cli, Format::Json, &[Format::Json, Format::Csv], "equilibria")?;
            let game = load_game(cli, stdin)?;
            let epsilon = cli.epsilon.unwrap_or(0.0);
            let eq = enumerate_pne_with_cap(&game, epsilon, *cap)?;
            Ok(Outcome::ok(match format {
                Format::Csv => equilibria_csv(&eq),
                _ => to_json(&json!({ "epsilon": epsilon, "count": eq.len(), "equilibria": eq })),
            }))
        }
        Command::Poa { cap } => {
            let format = format_or(cli, Format::Json, &[Format::Json, Format::Csv], "poa")?;
            let game = load_game(cli, stdin)?;
            let report = price_of_anarchy_with_cap(&game, cli.epsilon.unwrap_or(0.0), *cap)?;
            Ok(Outcome::ok(match format {
                Format::Csv => report.equilibria_csv(),
                _ => to_json(&report),
            }))
        }
        Command::ShapleyCheck { profile, samples } => {
            format_or(cli, Format::Json, &[Format::Json], "shapley-check")?;
            let game = load_game(cli, stdin)?;
            let profiles = match profile {
                Some(p) => vec![StrategyProfile::new(p.clone())],
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    (0..*samples).map(|_| random_profile(&game, &mut rng)).collect()
                }
            };
            let mut ev = Evaluator::new(&game);
            let mut worst: Option<(f64, serde_json::Value)> = None;
            for x in &profiles {
                game.check_profile(x)?;
                let shapley = shapley_values(&game, x)?;
                let payoffs = ev.payoffs(x);
                let diff = shapley
                    .iter()
                    .zip(&payoffs)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                if worst.as_ref().is_none_or(|(d, _)| diff > *d) {
                    worst = Some((diff, json!({ "profile": x, "payoffs": payoffs, "shapley": shapley })));
                }
            }
            let (max_diff, detail) = worst.unwrap_or((0.0, serde_json::Value::Null));
            let passed = max_diff <= SHAPLEY_CHECK_TOLERANCE;
            let text = to_json(&json!({
                "profiles_checked": profiles.len(),
                "max_abs_difference": max_diff,
                "tolerance": SHAPLEY_CHECK_TOLERANCE,
                "passed": passed,
                "worst": detail,
            }));
            Ok(Outcome {
                text,
                failure: (!passed)
                    .then(|| Error::Internal(format!("payoffs differ from Shapley values by {max_diff:e}"))),
            })
        }
        Command::Scenario { which } => {
            format_or(cli, Format::Json, &[Format::Json], "scenario")?;
            let game = match which {
                Scenario::Segment { m, players } => segment_game_with_players(*m, *players)?,
                Scenario::PoaTight { n } => poa_tight_instance(*n)?,
                Scenario::LimitedAttraction { points, radii } => {
                    let pts: Vec<Vec<f64>> = points.iter().map(|&p| vec![p]).collect();
                    limited_attraction_instance(pts.clone(), radii, vec![pts])?
                }
            };
            let mut text = game.to_config().to_json();
            text.push('\n');
            Ok(Outcome::ok(text))
        }
    }
}
