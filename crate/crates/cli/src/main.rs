//! Command-line front end: equilibrium constants, per-scenario equilibria
//! with optional oracle verification, leader/order selection, and the two
//! Monte-Carlo sweeps.
//!
//! Exit codes: 0 success, 1 infeasible regime, 2 input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use macpower::{
    best_leader_evmn, best_leader_welfare, best_order_evmn, best_order_welfare, br_iterate,
    enumerate_leader, enumerate_order, evmn, regime_check, run_load_sweep, run_snr_sweep,
    sample_channels, scenario_from_json, sic_nash, social_welfare, stackelberg, sud_nash,
    verify_no_deviation, verify_stackelberg, ChannelSpec, ChannelState, DecodingOrder,
    EfficiencyModel, EmitFormat, Error, ExperimentSpec, GameConfig, PowerProfile, Receiver, Regime,
};

const SEED_ENV: &str = "MACPOWER_SEED";

#[derive(Parser)]
#[command(name = "macpower", version, about = "Energy-efficient power-control equilibria on a multiple access channel")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print beta* for a block length, plus gamma* and c when K is given.
    Constants {
        #[arg(long = "M")]
        m: u32,
        #[arg(long = "K")]
        k: Option<u32>,
        #[arg(long = "N", default_value_t = 1.0)]
        n: f64,
    },
    /// Solve one equilibrium for a JSON scenario and print it as JSON.
    Equilibrium {
        #[arg(long, value_enum)]
        receiver: ReceiverKind,
        #[arg(long)]
        config: PathBuf,
        /// Decoding order for --receiver sic, as comma-separated 1-based ids
        /// (first decoded first). Defaults to 1,2,...,K.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<u32>>,
        /// Leader id for --receiver stackelberg. Defaults to 1.
        #[arg(long)]
        leader: Option<u32>,
        /// Run the independent oracle checks on the outcome.
        #[arg(long)]
        verify: bool,
    },
    /// Pick the best leader or decoding order for a metric.
    Best {
        #[arg(long, value_enum)]
        metric: Metric,
        #[arg(long, value_enum)]
        choice: Choice,
        #[arg(long)]
        config: PathBuf,
        /// Cross-check the rule against exhaustive enumeration.
        #[arg(long)]
        brute_force: bool,
    },
    /// Run a Monte-Carlo sweep described by a JSON spec.
    #[command(subcommand)]
    Sweep(SweepCommand),
}

#[derive(Subcommand)]
enum SweepCommand {
    /// Decoding-order comparison over an SNR grid.
    Snr(SweepArgs),
    /// SIC / Stackelberg welfare gains over SUD against load alpha = K/N.
    Load(SweepArgs),
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    spec: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReceiverKind {
    Sud,
    Sic,
    Stackelberg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Metric {
    Welfare,
    Evmn,
}

#[derive(Clone, Copy, ValueEnum)]
enum Choice {
    Leader,
    Order,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::SudInfeasible { .. } | Error::FollowersIllPosed { .. } | Error::NoSignChange { .. } => 1,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Constants { m, k, n } => {
            let model = EfficiencyModel::new(m)?;
            println!("beta_star {}", model.beta_star()?);
            if let Some(k) = k {
                println!("gamma_star {}", model.gamma_star(k, n)?);
                println!("c {}", model.interference_coefficient(k, n)?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Equilibrium { receiver, config, order, leader, verify } => {
            let (config, channel) = load_scenario(&config)?;
            equilibrium_command(&config, &channel, receiver, order, leader, verify)
        }
        Command::Best { metric, choice, config, brute_force } => {
            let (config, channel) = load_scenario(&config)?;
            best_command(&config, &channel, metric, choice, brute_force)
        }
        Command::Sweep(sweep) => {
            let (args, result) = match sweep {
                SweepCommand::Snr(args) => {
                    let spec = load_spec(&args.spec)?;
                    (args, run_snr_sweep(&spec)?)
                }
                SweepCommand::Load(args) => {
                    let spec = load_spec(&args.spec)?;
                    (args, run_load_sweep(&spec)?)
                }
            };
            for note in &result.skipped {
                eprintln!("skipped: {note}");
            }
            let format = match args.format {
                Format::Csv => EmitFormat::Csv,
                Format::Json => EmitFormat::Json,
            };
            macpower::emit(&result, format, &args.out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn env_seed() -> Option<u64> {
    std::env::var(SEED_ENV).ok().and_then(|s| s.parse().ok())
}

fn load_scenario(path: &PathBuf) -> Result<(GameConfig, ChannelState), Error> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let (config, spec) = scenario_from_json(&text)?;
    let channel = match spec {
        ChannelSpec::Fixed(state) => state,
        ChannelSpec::Rayleigh => sample_channels(config.k, env_seed().unwrap_or(0), 0),
    };
    Ok((config, channel))
}

fn load_spec(path: &PathBuf) -> Result<ExperimentSpec, Error> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut spec = ExperimentSpec::from_json(&text)?;
    if let Some(seed) = env_seed() {
        spec.seed = seed;
    }
    Ok(spec)
}

fn equilibrium_command(
    config: &GameConfig,
    channel: &ChannelState,
    receiver: ReceiverKind,
    order: Option<Vec<u32>>,
    leader: Option<u32>,
    verify: bool,
) -> Result<ExitCode, Error> {
    let order = match order {
        Some(ids) => DecodingOrder::new(ids)?,
        None => DecodingOrder::identity(config.k),
    };
    let leader = leader.unwrap_or(1);
    let outcome = match receiver {
        ReceiverKind::Sud => sud_nash(config, channel)?,
        ReceiverKind::Sic => sic_nash(config, channel, &order)?,
        ReceiverKind::Stackelberg => stackelberg(config, channel, leader)?,
    };

    let mut document = serde_json::to_value(&outcome)?;
    if verify && outcome.regime == Regime::NonSaturated {
        let profile = outcome.power_profile();
        let verification = match receiver {
            ReceiverKind::Sud | ReceiverKind::Sic => {
                let oracle_receiver = match receiver {
                    ReceiverKind::Sud => Receiver::Sud,
                    _ => Receiver::Sic(order.clone()),
                };
                let deviation = verify_no_deviation(config, channel, &oracle_receiver, &profile, 300)?;
                let trace = br_iterate(config, channel, &oracle_receiver, &PowerProfile::zeros(config.k))?;
                let br_match = trace.fixed_point().map(|fixed| {
                    fixed
                        .p
                        .iter()
                        .zip(&profile.p)
                        .map(|(a, b)| (a - b).abs() / b.abs().max(1e-300))
                        .fold(0.0f64, f64::max)
                });
                json!({
                    "no_deviation": deviation,
                    "no_deviation_pass": deviation.passed(),
                    "br_fixed_point_max_rel_err": br_match,
                    "br_converged": trace.converged,
                })
            }
            ReceiverKind::Stackelberg => {
                let check = verify_stackelberg(config, channel, leader, &profile, 300)?;
                json!({
                    "stackelberg_check": check,
                    "pass": check.passed(),
                })
            }
        };
        document["verification"] = verification;
    }
    println!("{}", serde_json::to_string_pretty(&document)?);
    if outcome.regime == Regime::NonSaturated {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn best_command(
    config: &GameConfig,
    channel: &ChannelState,
    metric: Metric,
    choice: Choice,
    brute_force: bool,
) -> Result<ExitCode, Error> {
    let regimes = regime_check(config)?;
    let score_fn = match metric {
        Metric::Welfare => social_welfare,
        Metric::Evmn => evmn,
    };
    let document = match choice {
        Choice::Leader => {
            if !regimes.stackelberg {
                return Err(Error::FollowersIllPosed {
                    k: config.k,
                    n: config.n,
                    margin: -1.0,
                });
            }
            let (chosen, scores, extra) = match metric {
                Metric::Welfare => {
                    let chosen = best_leader_welfare(config, channel)?;
                    let (_, scores) = enumerate_leader(config, channel, score_fn)?;
                    (chosen, scores, serde_json::Value::Null)
                }
                Metric::Evmn => {
                    let report = best_leader_evmn(config, channel)?;
                    let scores = report.scores.clone();
                    let chosen = report.chosen;
                    (chosen, scores, serde_json::to_value(&report)?)
                }
            };
            let oracle = if brute_force {
                let (winner, brute_scores) = enumerate_leader(config, channel, score_fn)?;
                let agree = (brute_scores[(winner - 1) as usize]
                    - brute_scores[(chosen - 1) as usize])
                    .abs()
                    <= 1e-12 * brute_scores[(winner - 1) as usize].abs();
                Some(json!({ "winner": winner, "agrees": agree }))
            } else {
                None
            };
            json!({
                "choice": "leader",
                "chosen": chosen,
                "scores": scores,
                "report": extra,
                "brute_force": oracle,
            })
        }
        Choice::Order => {
            let chosen = match metric {
                Metric::Welfare => best_order_welfare(config, channel)?,
                Metric::Evmn => best_order_evmn(config, channel)?,
            };
            let outcome = sic_nash(config, channel, &chosen)?;
            let score = score_fn(&outcome)?;
            let oracle = if brute_force {
                if config.k > 8 {
                    return Err(Error::InvalidConfig(
                        "brute force over K! orders is limited to K <= 8".into(),
                    ));
                }
                let (winner, best_score) = enumerate_order(config, channel, score_fn)?;
                let agree = (best_score - score).abs() <= 1e-12 * best_score.abs();
                Some(json!({ "winner": winner.as_slice(), "score": best_score, "agrees": agree }))
            } else {
                None
            };
            json!({
                "choice": "order",
                "chosen": chosen.as_slice(),
                "score": score,
                "brute_force": oracle,
            })
        }
    };
    println!("{}", serde_json::to_string_pretty(&document)?);
    Ok(ExitCode::SUCCESS)
}
